#include "rectlat/io.hpp"

int main(int argc, char** argv) { return rectlat::run(argc, argv); }
