#include <iostream>

#include "cli.hpp"

int main(int argc, char ** argv)
{
    std::vector<std::string> args(argv + 1, argv + argc);
    auto const result = xdn::cli::run(args);
    std::string const text = xdn::cli::emit(result, result.format);
    bool const failed = result.document.contains("error");
    if (failed && result.format == xdn::cli::Format::table)
        std::cerr << text;
    else
        std::cout << text;
    return result.exitCode;
}
