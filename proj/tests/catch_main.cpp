// Single compiled Catch2 translation unit (amalgamated distribution).
#include <catch2/catch_amalgamated.cpp>
