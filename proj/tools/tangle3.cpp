#include <iostream>
int main() { std::cout << "tangle3 placeholder\n"; return 0; }
