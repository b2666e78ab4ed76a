#include <cstdio>

int main() {
  std::printf("wb: command-line interface under construction\n");
  return 0;
}
