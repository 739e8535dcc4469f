#include <cstdlib>
#include <iostream>
#include <string>

#include "gamelab/verify.hpp"

int main(int argc, char** argv) {
    std::vector<int> only;
    for (int i = 1; i < argc; ++i) only.push_back(std::stoi(argv[i]));
    std::uint64_t seed = gamelab::verify::kDefaultAcceptanceSeed;
    if (const char* env = std::getenv("GAMELAB_SEED")) seed = std::stoull(env);
    bool ok = true;
    for (const auto& r : gamelab::verify::run_acceptance(only, seed)) {
        std::cout << gamelab::verify::format_result(r) << std::endl;
        ok &= r.status != gamelab::verify::Status::fail;
    }
    return ok ? 0 : 1;
}
