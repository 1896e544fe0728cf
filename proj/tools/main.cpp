#include "concyclic/app.hpp"

int main(int argc, char** argv) { return concyclic::app::run(argc, argv); }
