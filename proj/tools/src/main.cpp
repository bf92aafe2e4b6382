#include <steffenlab/cli.hpp>

#include <csignal>
#include <iostream>

namespace {

std::atomic<bool> stop_requested {false};

extern "C" void on_interrupt(int)
{
    stop_requested.store(true);
}

} // namespace

int main(int argc, char** argv)
{
    std::signal(SIGINT, on_interrupt);
    std::signal(SIGTERM, on_interrupt);
    std::vector<std::string> args(argv + 1, argv + argc);
    return steffenlab::cli_main(args, std::cin, std::cout, std::cerr, &stop_requested);
}
