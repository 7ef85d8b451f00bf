#include "bump/stream.hpp"

namespace bump {

SeededStream::SeededStream(std::uint64_t master_seed, std::uint64_t trial, std::uint64_t branch) noexcept
    : master_seed_(master_seed), trial_(trial), branch_(branch & 3U) {
  key_ = splitmix64(master_seed ^ splitmix64(trial * 4 + branch_ + 0x632BE59BD9B4E019ULL));
}

}  // namespace bump
