#include "coevo/config.h"

int main(int argc, char** argv) {
    return coevo::run_cli(argc, argv);
}
