#include "gapmor/gapmor.hpp"
int main() { return 0; }
