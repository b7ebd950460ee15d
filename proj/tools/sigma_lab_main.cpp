#include "sigma_lab/cli.hpp"

int main(int argc, char** argv) {
    return sigmalab::run_cli(std::vector<std::string>(argv + 1, argv + argc));
}
