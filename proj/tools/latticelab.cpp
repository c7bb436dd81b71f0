#include <latticelab/cli.hpp>

int main(int argc, char** argv) {
    return latticelab::cli::run(argc, argv);
}
