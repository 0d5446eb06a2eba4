#include <cstdio>
int main() { std::puts("cremona"); return 0; }
