#include "ldp/cli.hpp"

int main(int argc, char** argv)
{
    return ldp::run_command(argc, argv);
}
