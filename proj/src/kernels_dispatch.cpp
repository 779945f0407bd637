#include <cstdlib>
#include <cstring>

#include "dynastr/kernels.hpp"

namespace dynastr::kernels {

const KernelTable& active() noexcept {
  static const KernelTable& table = [] () -> const KernelTable& {
    const char* forced = std::getenv("DYNASTR_KERNELS");
    if (forced != nullptr && std::strcmp(forced, "scalar") == 0) return scalar_table();
    if (const KernelTable* t = avx2_table()) return *t;
    return scalar_table();
  }();
  return table;
}

}  // namespace dynastr::kernels
