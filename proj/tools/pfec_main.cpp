#include <cstdio>
int main() { std::puts("pfec"); return 0; }
