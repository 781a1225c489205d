#include "qrec/cli.hpp"

int main(int argc, char** argv) {
  int code = 0;
  const auto config = qrec::cli::parse_args(argc, argv, code);
  if (!config) return code;
  return qrec::cli::run(*config);
}
