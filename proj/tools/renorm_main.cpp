#include <vector>

#include "renorm/cli/dispatch.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args;
    for (int a = 1; a < argc; ++a) args.emplace_back(argv[a]);
    return renorm::cli::dispatch(args);
}
