// Acceptance gate placeholder; the real criteria land with the library.
#include <cstdio>
int main() {
  std::puts("acceptance: not yet implemented");
  return 1;
}
