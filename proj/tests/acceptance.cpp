// placeholder; real acceptance suite added after unit tests pass
#include <cstdio>
int main(int, char**) { std::puts("acceptance placeholder"); return 1; }
