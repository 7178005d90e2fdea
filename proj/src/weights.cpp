#include "webgram/weights.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>

namespace webgram {

namespace {

std::string_view strip(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

// "(a,b,c)" or "a,b,c"; empty input or "()" gives an empty list.
std::vector<int> parse_int_list(std::string_view text, const char* what) {
  std::string_view s = strip(text);
  if (!s.empty() && s.front() == '(') {
    if (s.back() != ')') throw ParseError(std::string("unbalanced parentheses in ") + what + " '" + std::string(text) + "'");
    s = strip(s.substr(1, s.size() - 2));
  }
  std::vector<int> out;
  if (s.empty()) return out;
  while (true) {
    const auto comma = s.find(',');
    std::string_view item = strip(s.substr(0, comma));
    int v = 0;
    const auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
    if (item.empty() || ec != std::errc() || ptr != item.data() + item.size()) {
      throw ParseError(std::string("bad integer '") + std::string(item) + "' in " + what + " '" + std::string(text) + "'");
    }
    out.push_back(v);
    if (comma == std::string_view::npos) break;
    s.remove_prefix(comma + 1);
  }
  return out;
}

}  // namespace

// ----------------------------------------------------------------- Partition

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 0 || (i > 0 && parts_[i] > parts_[i - 1])) {
      throw std::invalid_argument("not a partition: parts must be non-negative and weakly decreasing");
    }
  }
}

Partition Partition::parse(std::string_view text) {
  try {
    return Partition(parse_int_list(text, "partition"));
  } catch (const ParseError&) {
    throw;
  } catch (const std::invalid_argument&) {
    throw ParseError("not a partition: '" + std::string(text) + "'");
  }
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

Partition Partition::transpose() const {
  std::vector<int> t;
  if (!parts_.empty()) {
    t.assign(static_cast<std::size_t>(parts_.front()), 0);
    for (int p : parts_) {
      for (int c = 0; c < p; ++c) ++t[static_cast<std::size_t>(c)];
    }
  }
  return Partition(std::move(t));
}

std::string Partition::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < parts_.size(); ++i) os << (i ? "," : "") << parts_[i];
  os << ')';
  return os.str();
}

// ---------------------------------------------------------------------- Word

Word::Word(std::vector<int> letters, int rank) : letters_(std::move(letters)), rank_(rank) {
  if (rank_ < 2) throw std::invalid_argument("rank n must be at least 2");
  for (int x : letters_) {
    if (x <= 0 || x >= rank_) {
      throw std::invalid_argument("letter " + std::to_string(x) + " outside 1.." + std::to_string(rank_ - 1));
    }
  }
}

Word Word::parse(std::string_view text, int rank) {
  std::vector<int> letters;
  for (char ch : strip(text)) {
    if (ch < '0' || ch > '9') throw ParseError("word letters must be digits: '" + std::string(text) + "'");
    letters.push_back(ch - '0');
  }
  try {
    return Word(std::move(letters), rank);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

Word Word::prefix(int len) const {
  return Word(std::vector<int>(letters_.begin(), letters_.begin() + len), rank_);
}

int Word::total() const { return std::accumulate(letters_.begin(), letters_.end(), 0); }

std::string Word::to_string() const {
  std::string s;
  for (int x : letters_) s += std::to_string(x);
  return s;
}

// ----------------------------------------------------------- MinusculeWeight

MinusculeWeight::MinusculeWeight(std::vector<int> bits) : bits_(std::move(bits)) {
  for (int b : bits_) {
    if (b != 0 && b != 1) throw std::invalid_argument("minuscule weight entries must be 0 or 1");
  }
}

MinusculeWeight MinusculeWeight::parse(std::string_view text) {
  try {
    return MinusculeWeight(parse_int_list(text, "weight"));
  } catch (const ParseError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

int MinusculeWeight::ones() const { return static_cast<int>(std::count(bits_.begin(), bits_.end(), 1)); }

bool MinusculeWeight::is_dominant() const { return std::is_sorted(bits_.begin(), bits_.end(), std::greater<>()); }

std::string MinusculeWeight::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < bits_.size(); ++i) os << (i ? "," : "") << bits_[i];
  os << ')';
  return os.str();
}

std::string to_string(const std::vector<RootPair>& roots) {
  std::ostringstream os;
  os << '{';
  for (std::size_t k = 0; k < roots.size(); ++k) os << (k ? "," : "") << '(' << roots[k].i << ',' << roots[k].j << ')';
  os << '}';
  return os.str();
}

// ----------------------------------------------------------------- operations

Partition fundamental_weight(int i, int n) {
  if (i < 1 || i > n - 1) {
    throw std::invalid_argument("fundamental weight index " + std::to_string(i) + " outside 1.." + std::to_string(n - 1));
  }
  return Partition(std::vector<int>(static_cast<std::size_t>(i), 1));
}

Partition weight_of_word(const Word& x) {
  std::vector<int> rows(static_cast<std::size_t>(x.rank()), 0);
  for (int a : x.letters()) {
    for (int r = 0; r < a; ++r) ++rows[static_cast<std::size_t>(r)];
  }
  return Partition(std::move(rows));
}

std::vector<MinusculeWeight> omega(int a, int n) {
  if (a < 1 || a > n - 1) {
    throw std::invalid_argument("omega(a, n) needs 1 <= a <= n-1, got a=" + std::to_string(a) + ", n=" + std::to_string(n));
  }
  std::vector<int> bits(static_cast<std::size_t>(n), 0);
  std::fill(bits.end() - a, bits.end(), 1);
  std::vector<MinusculeWeight> out;
  do {
    out.emplace_back(bits);
  } while (std::next_permutation(bits.begin(), bits.end()));
  return out;
}

bool dominance_leq(const Partition& lambda, const Partition& mu) {
  if (lambda.size() != mu.size()) return false;
  int sl = 0;
  int sm = 0;
  const int rows = std::max(lambda.length(), mu.length());
  for (int i = 1; i <= rows; ++i) {
    sl += lambda[i];
    sm += mu[i];
    if (sl > sm) return false;
  }
  return true;
}

int axial_distance(const Partition& lambda, int i, int j) { return lambda[i] - lambda[j] + j - i; }

std::vector<RootPair> phi_set(const MinusculeWeight& mu) {
  std::vector<RootPair> out;
  for (int i = 1; i <= mu.length(); ++i) {
    for (int j = i + 1; j <= mu.length(); ++j) {
      if (mu[i] == 0 && mu[j] == 1) out.push_back({i, j});
    }
  }
  return out;
}

std::optional<Partition> add_strip(const Partition& lambda, const MinusculeWeight& mu) {
  const int rows = std::max(lambda.length(), mu.length());
  std::vector<int> v(static_cast<std::size_t>(rows));
  for (int i = 1; i <= rows; ++i) {
    v[static_cast<std::size_t>(i - 1)] = lambda[i] + mu[i];
    if (i > 1 && v[static_cast<std::size_t>(i - 1)] > v[static_cast<std::size_t>(i - 2)]) return std::nullopt;
  }
  return Partition(std::move(v));
}

Partition transpose(const Partition& lambda) { return lambda.transpose(); }

namespace {

void partitions_rec(int remaining, int max_part, int rows_left, std::vector<int>& cur, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(cur);
    return;
  }
  if (rows_left == 0) return;
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    cur.push_back(p);
    partitions_rec(remaining - p, p, rows_left - 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int size, int max_rows) {
  std::vector<Partition> out;
  std::vector<int> cur;
  if (size < 0) return out;
  partitions_rec(size, size, max_rows, cur, out);
  return out;
}

}  // namespace webgram
