#include "optobath/cli.hpp"

int main(int argc, char** argv) {
    return optobath::cli::run(argc, argv);
}
