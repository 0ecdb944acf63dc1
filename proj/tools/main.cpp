#include "polyfold/cli.hpp"

int main(int argc, char** argv) {
  return polyfold::run(std::vector<std::string>(argv + 1, argv + argc));
}
