#include <iostream>

#include <ferrocode/ferrocode.hpp>

int main() {
    std::cout << "ferrocode\n";
    return 0;
}
