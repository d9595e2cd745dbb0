#pragma once

// Shared caches behind a Monoid. Private to the library.

#include <atomic>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "mfr/divisibility.hpp"
#include "mfr/presentation.hpp"

namespace mfr {

  struct ClassInfo {
    std::vector<Word> members;  // sorted
  };

  using DivisorList = std::vector<Element>;

  /// Key for unordered pairs of words. 0xff never occurs as an atom index.
  inline std::string pair_key(Word const& x, Word const& y) {
    std::string k;
    k.reserve(x.size() + y.size() + 1);
    k += x;
    k += static_cast<char>(0xff);
    k += y;
    return k;
  }

  template <typename V>
  class Memo {
   public:
    std::optional<V> find(std::string const& key) const {
      std::lock_guard lock(mutex_);
      auto            it = map_.find(key);
      if (it == map_.end()) {
        return std::nullopt;
      }
      return it->second;
    }
    void insert(std::string const& key, V value) {
      std::lock_guard lock(mutex_);
      map_.emplace(key, std::move(value));
    }

   private:
    mutable std::mutex                 mutex_;
    std::unordered_map<std::string, V> map_;
  };

  struct MonoidCache {
    Memo<std::shared_ptr<ClassInfo const>>   classes;
    Memo<std::shared_ptr<DivisorList const>> left_divisors;
    Memo<std::shared_ptr<DivisorList const>> right_divisors;
    Memo<std::optional<LcmResult>>           right_lcms;
    Memo<std::optional<LcmResult>>           basic_lcms;

    std::once_flag          opposite_once;
    std::unique_ptr<Monoid> opposite;

    std::mutex                  basics_mutex;
    std::unique_ptr<BasicTable> basics;

    std::atomic<bool> three_ore_verified{false};
  };

}  // namespace mfr
