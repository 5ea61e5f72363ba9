#include "treepack/partition.hpp"

#include <algorithm>
#include <cctype>
#include <map>

#include "treepack/errors.hpp"

namespace treepack {

namespace {

int max_block(const std::vector<int>& rgs) {
  int m = -1;
  for (int b : rgs) m = std::max(m, b);
  return m;
}

}  // namespace

Partition Partition::discrete(int t) {
  if (t < 1) throw InputError("partition size must be positive");
  std::vector<int> rgs(t);
  for (int i = 0; i < t; ++i) rgs[i] = i;
  return Partition(std::move(rgs), t);
}

Partition Partition::single_block(int t) {
  if (t < 1) throw InputError("partition size must be positive");
  return Partition(std::vector<int>(t, 0), 1);
}

Partition Partition::from_rgs(std::vector<int> rgs) {
  if (rgs.empty()) throw InputError("partition size must be positive");
  int seen = -1;
  for (std::size_t i = 0; i < rgs.size(); ++i) {
    if (rgs[i] < 0 || rgs[i] > seen + 1) {
      throw InputError("not a restricted-growth string at position " + std::to_string(i));
    }
    seen = std::max(seen, rgs[i]);
  }
  int blocks = seen + 1;
  return Partition(std::move(rgs), blocks);
}

Partition Partition::from_assignment(const std::vector<int>& block_of) {
  if (block_of.empty()) throw InputError("partition size must be positive");
  std::map<int, int> relabel;
  std::vector<int> rgs(block_of.size());
  for (std::size_t i = 0; i < block_of.size(); ++i) {
    auto [it, inserted] = relabel.try_emplace(block_of[i], static_cast<int>(relabel.size()));
    rgs[i] = it->second;
  }
  return Partition(std::move(rgs), static_cast<int>(relabel.size()));
}

Partition Partition::from_blocks(int t, const std::vector<std::vector<int>>& blocks) {
  if (t < 1) throw InputError("partition size must be positive");
  std::vector<int> assign(t, -1);
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (blocks[b].empty()) throw InputError("empty partition block");
    for (int v : blocks[b]) {
      if (v < 0 || v >= t) throw InputError("block vertex out of range");
      if (assign[v] != -1) throw InputError("vertex appears in two blocks");
      assign[v] = static_cast<int>(b);
    }
  }
  for (int v = 0; v < t; ++v) {
    if (assign[v] == -1) throw InputError("vertex missing from all blocks");
  }
  return from_assignment(assign);
}

Partition Partition::parse(const std::string& text, int t) {
  if (text.empty()) throw InputError("empty partition string");
  std::vector<int> rgs;
  if (text.find(',') != std::string::npos) {
    std::size_t pos = 0;
    while (pos <= text.size()) {
      std::size_t comma = text.find(',', pos);
      std::string tok = text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
      if (tok.empty()) throw InputError("malformed partition string: " + text);
      for (char c : tok) {
        if (!std::isdigit(static_cast<unsigned char>(c))) {
          throw InputError("malformed partition string: " + text);
        }
      }
      rgs.push_back(std::stoi(tok));
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
  } else {
    for (char c : text) {
      int d;
      if (c >= '0' && c <= '9') {
        d = c - '0';
      } else if (c >= 'a' && c <= 'f') {
        d = 10 + (c - 'a');
      } else {
        throw InputError("malformed partition string: " + text);
      }
      rgs.push_back(d);
    }
  }
  if (static_cast<int>(rgs.size()) != t) {
    throw InputError("partition has " + std::to_string(rgs.size()) + " vertices, expected " +
                     std::to_string(t));
  }
  return from_rgs(std::move(rgs));
}

std::vector<std::vector<int>> Partition::blocks() const {
  std::vector<std::vector<int>> out(blocks_);
  for (int v = 0; v < size(); ++v) out[rgs_[v]].push_back(v);
  return out;
}

std::string Partition::rgs_string() const {
  if (max_block(rgs_) < 16) {
    std::string s;
    s.reserve(rgs_.size());
    for (int b : rgs_) s.push_back(b < 10 ? static_cast<char>('0' + b) : static_cast<char>('a' + (b - 10)));
    return s;
  }
  std::string s;
  for (std::size_t i = 0; i < rgs_.size(); ++i) {
    if (i) s.push_back(',');
    s += std::to_string(rgs_[i]);
  }
  return s;
}

PartitionEnumerator::PartitionEnumerator(int t) : t_(t) {
  if (t < 1) throw InputError("partition size must be positive");
  reset();
}

void PartitionEnumerator::reset() {
  fresh_ = true;
  done_ = false;
  rgs_.assign(t_, 0);
  max_prefix_.assign(t_, 0);
  max_prefix_[0] = -1;  // rgs_[0] is pinned to 0
  for (int i = 1; i < t_; ++i) max_prefix_[i] = 0;
}

std::optional<Partition> PartitionEnumerator::next() {
  if (done_) return std::nullopt;
  if (fresh_) {
    fresh_ = false;
    return Partition::from_rgs(rgs_);
  }
  // Odometer step: the rightmost position that can still grow bumps by one
  // and everything after it resets to block 0.
  for (int i = t_ - 1; i >= 1; --i) {
    if (rgs_[i] <= max_prefix_[i]) {
      ++rgs_[i];
      for (int j = i + 1; j < t_; ++j) {
        rgs_[j] = 0;
        max_prefix_[j] = std::max(max_prefix_[j - 1], rgs_[j - 1]);
      }
      return Partition::from_rgs(rgs_);
    }
  }
  done_ = true;
  return std::nullopt;
}

bool for_each_partition(int t, const std::function<bool(const Partition&)>& visit) {
  PartitionEnumerator en(t);
  while (auto p = en.next()) {
    if (!visit(*p)) return false;
  }
  return true;
}

long long bell_number(int t) {
  if (t < 0) throw InputError("bell_number: negative argument");
  if (t > 20) throw LimitError("bell_number: argument too large for 64-bit arithmetic");
  // Bell triangle.
  std::vector<std::vector<long long>> tri(t + 1);
  tri[0] = {1};
  for (int i = 1; i <= t; ++i) {
    tri[i].resize(i + 1);
    tri[i][0] = tri[i - 1][i - 1];
    for (int j = 1; j <= i; ++j) tri[i][j] = tri[i][j - 1] + tri[i - 1][j - 1];
  }
  return tri[t][0];
}

}  // namespace treepack
