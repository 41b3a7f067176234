#include "group.hpp"

#include <cctype>
#include <charconv>
#include <limits>
#include <sstream>
#include <unordered_set>

#include "coding.hpp"

namespace amenlab {

using coding::checked_add;
using coding::checked_mul;

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  return s;
}

std::optional<std::int64_t> parse_int(std::string_view s) {
  s = trim(s);
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  if (s.empty()) return std::nullopt;
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

std::optional<std::uint64_t> parse_uint(std::string_view s) {
  if (s.empty()) return std::nullopt;
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

[[noreturn]] void malformed_input(std::string_view what) {
  throw Error(ErrorCode::kMalformedInput,
              "malformed element literal '" + std::string(what) + "'");
}

std::string power_suffix(std::int64_t e) {
  return e == 1 ? std::string() : "^" + std::to_string(e);
}

// Letters are single characters; consecutive equal letters collapse into a
// power.
std::string format_letters(const std::vector<std::pair<char, int>>& letters) {
  if (letters.empty()) return "e";
  std::string out;
  std::size_t i = 0;
  while (i < letters.size()) {
    std::int64_t e = 0;
    std::size_t j = i;
    while (j < letters.size() && letters[j] == letters[i]) {
      e += letters[j].second;
      ++j;
    }
    out += letters[i].first;
    out += power_suffix(e);
    i = j;
  }
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// Family defaults
// ---------------------------------------------------------------------------

Code Family::word(std::span<const Letter> letters) const {
  Code acc = code(0);
  for (const Letter& l : letters) {
    Code g = generator(l.gen);
    acc = mult(acc, l.inverse ? inv(g) : g);
  }
  return acc;
}

std::optional<Code> Family::literal(std::string_view) const {
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// FreeGroup
// ---------------------------------------------------------------------------

namespace {

// Number of reduced words of length len over 2k letters; nullopt on overflow.
std::optional<std::uint64_t> reduced_count(unsigned k, std::size_t len) {
  if (len == 0) return 1;
  std::uint64_t r = 2 * k;
  for (std::size_t i = 1; i < len; ++i) {
    if (__builtin_mul_overflow(r, 2 * k - 1, &r)) return std::nullopt;
  }
  return r;
}

}  // namespace

FreeGroup::FreeGroup(unsigned rank) : rank_(rank) {
  if (rank == 0 || rank > 26) {
    throw Error(ErrorCode::kMalformedSpec, "free group rank must be 1..26");
  }
}

std::string FreeGroup::spec() const { return "free:" + std::to_string(rank_); }

std::vector<unsigned> FreeGroup::decode(Code x) const {
  std::uint64_t c = value(x);
  std::size_t len = 0;
  std::uint64_t offset = 0;
  for (;;) {
    auto cnt = reduced_count(rank_, len);
    if (!cnt || c - offset < *cnt) break;
    offset += *cnt;
    ++len;
  }
  std::uint64_t r = c - offset;
  const unsigned base = 2 * rank_ - 1;
  std::vector<std::uint64_t> weights(len, 1);
  for (std::size_t p = len; p-- > 1;) weights[p - 1] = weights[p] * base;
  std::vector<unsigned> word;
  word.reserve(len);
  for (std::size_t p = 0; p < len; ++p) {
    auto digit = static_cast<unsigned>(r / weights[p]);
    r %= weights[p];
    if (p > 0 && digit >= inverse_letter(word.back())) ++digit;
    word.push_back(digit);
  }
  return word;
}

Code FreeGroup::encode(std::span<const unsigned> reduced) const {
  const std::size_t len = reduced.size();
  std::uint64_t offset = 0;
  for (std::size_t l = 0; l < len; ++l) {
    auto cnt = reduced_count(rank_, l);
    if (!cnt) throw Error(ErrorCode::kOverflow, "free group word too long");
    offset = checked_add(offset, *cnt);
  }
  const unsigned base = 2 * rank_ - 1;
  std::uint64_t rank = 0;
  for (std::size_t p = 0; p < len; ++p) {
    unsigned digit = reduced[p];
    if (p > 0) {
      unsigned forbidden = inverse_letter(reduced[p - 1]);
      if (digit == forbidden) {
        throw Error(ErrorCode::kMalformedInput, "word is not reduced");
      }
      if (digit > forbidden) --digit;
      rank = checked_add(checked_mul(rank, base), digit);
    } else {
      rank = digit;
    }
  }
  return code(checked_add(offset, rank));
}

Code FreeGroup::mult(Code x, Code y) const {
  std::vector<unsigned> u = decode(x);
  std::vector<unsigned> v = decode(y);
  std::size_t i = 0;
  while (!u.empty() && i < v.size() && u.back() == inverse_letter(v[i])) {
    u.pop_back();
    ++i;
  }
  u.insert(u.end(), v.begin() + static_cast<std::ptrdiff_t>(i), v.end());
  return encode(u);
}

Code FreeGroup::inv(Code x) const {
  std::vector<unsigned> u = decode(x);
  std::vector<unsigned> r(u.rbegin(), u.rend());
  for (auto& l : r) l = inverse_letter(l);
  return encode(r);
}

std::vector<std::string> FreeGroup::generator_names() const {
  std::vector<std::string> names;
  for (unsigned i = 0; i < rank_; ++i) names.emplace_back(1, char('a' + i));
  return names;
}

Code FreeGroup::generator(unsigned i) const { return code(2 * i + 1); }

std::string FreeGroup::format(Code x) const {
  std::vector<std::pair<char, int>> letters;
  for (unsigned l : decode(x)) {
    letters.emplace_back(char('a' + l / 2), (l & 1) ? -1 : 1);
  }
  return format_letters(letters);
}

// ---------------------------------------------------------------------------
// FreeAbelianGroup
// ---------------------------------------------------------------------------

FreeAbelianGroup::FreeAbelianGroup(unsigned dim) : dim_(dim) {
  if (dim == 0 || dim > 26) {
    throw Error(ErrorCode::kMalformedSpec, "zd dimension must be 1..26");
  }
}

std::string FreeAbelianGroup::spec() const {
  return "zd:" + std::to_string(dim_);
}

std::vector<std::int64_t> FreeAbelianGroup::decode(Code x) const {
  std::vector<std::int64_t> v;
  for (std::uint64_t z : coding::tuple_decode(value(x), dim_)) {
    v.push_back(coding::unzigzag(z));
  }
  return v;
}

Code FreeAbelianGroup::encode(std::span<const std::int64_t> v) const {
  std::vector<std::uint64_t> zz;
  zz.reserve(v.size());
  for (std::int64_t z : v) zz.push_back(coding::zigzag(z));
  return code(coding::tuple_code(zz));
}

Code FreeAbelianGroup::mult(Code x, Code y) const {
  auto a = decode(x);
  auto b = decode(y);
  for (unsigned i = 0; i < dim_; ++i) {
    if (__builtin_add_overflow(a[i], b[i], &a[i])) {
      throw Error(ErrorCode::kOverflow, "coordinate overflow");
    }
  }
  return encode(a);
}

Code FreeAbelianGroup::inv(Code x) const {
  auto a = decode(x);
  for (auto& c : a) c = -c;
  return encode(a);
}

std::vector<std::string> FreeAbelianGroup::generator_names() const {
  std::vector<std::string> names;
  for (unsigned i = 0; i < dim_; ++i) names.emplace_back(1, char('a' + i));
  return names;
}

Code FreeAbelianGroup::generator(unsigned i) const {
  std::vector<std::int64_t> v(dim_, 0);
  v.at(i) = 1;
  return encode(v);
}

std::optional<Code> FreeAbelianGroup::literal(std::string_view text) const {
  text = trim(text);
  if (text.empty()) return std::nullopt;
  if (text.front() == '(' && text.back() == ')') {
    text = text.substr(1, text.size() - 2);
    std::vector<std::int64_t> v;
    std::size_t start = 0;
    for (;;) {
      std::size_t comma = text.find(',', start);
      auto part = text.substr(start, comma == std::string_view::npos
                                         ? std::string_view::npos
                                         : comma - start);
      auto iv = parse_int(part);
      if (!iv) malformed_input(text);
      v.push_back(*iv);
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    if (v.size() != dim_) malformed_input(text);
    return encode(v);
  }
  if (dim_ == 1) {
    if (auto iv = parse_int(text)) {
      std::vector<std::int64_t> v{*iv};
      return encode(v);
    }
  }
  return std::nullopt;
}

std::string FreeAbelianGroup::format(Code x) const {
  auto v = decode(x);
  auto one = [](std::int64_t z) {
    return z > 0 ? "+" + std::to_string(z) : std::to_string(z);
  };
  if (dim_ == 1) return one(v[0]);
  std::string out = "(";
  for (unsigned i = 0; i < dim_; ++i) {
    if (i) out += ",";
    out += std::to_string(v[i]);
  }
  return out + ")";
}

// ---------------------------------------------------------------------------
// CyclicGroup
// ---------------------------------------------------------------------------

CyclicGroup::CyclicGroup(std::uint64_t m) : m_(m) {
  if (m < 2) throw Error(ErrorCode::kMalformedSpec, "cyclic order must be >= 2");
}

std::string CyclicGroup::spec() const { return "cyclic:" + std::to_string(m_); }

Code CyclicGroup::mult(Code x, Code y) const {
  unsigned __int128 s = static_cast<unsigned __int128>(value(x) % m_) +
                        value(y) % m_;
  return code(static_cast<std::uint64_t>(s % m_));
}

Code CyclicGroup::inv(Code x) const {
  std::uint64_t r = value(x) % m_;
  return code(r == 0 ? 0 : m_ - r);
}

std::vector<std::string> CyclicGroup::generator_names() const { return {"a"}; }

Code CyclicGroup::generator(unsigned) const { return code(1); }

std::optional<Code> CyclicGroup::literal(std::string_view text) const {
  auto iv = parse_int(text);
  if (!iv) return std::nullopt;
  auto m = static_cast<std::int64_t>(m_);
  std::int64_t r = *iv % m;
  if (r < 0) r += m;
  return code(static_cast<std::uint64_t>(r));
}

std::string CyclicGroup::format(Code x) const {
  return std::to_string(value(x));
}

// ---------------------------------------------------------------------------
// LamplighterGroup
// ---------------------------------------------------------------------------

LamplighterGroup::Element LamplighterGroup::decode(Code x) const {
  auto [set_code, cursor_code] = coding::cantor_unpair(value(x));
  Element e;
  for (unsigned b = 0; b < 64; ++b) {
    if (set_code & (std::uint64_t{1} << b)) e.lamps.push_back(coding::unzigzag(b));
  }
  std::sort(e.lamps.begin(), e.lamps.end());
  e.cursor = coding::unzigzag(cursor_code);
  return e;
}

Code LamplighterGroup::encode(const Element& e) const {
  std::uint64_t set_code = 0;
  for (std::int64_t lamp : e.lamps) {
    std::uint64_t bit = coding::zigzag(lamp);
    if (bit >= 64) throw Error(ErrorCode::kOverflow, "lamp position too far");
    set_code |= std::uint64_t{1} << bit;
  }
  return code(coding::cantor_pair(set_code, coding::zigzag(e.cursor)));
}

Code LamplighterGroup::mult(Code x, Code y) const {
  Element a = decode(x);
  Element b = decode(y);
  std::vector<std::int64_t> shifted;
  shifted.reserve(b.lamps.size());
  for (std::int64_t lamp : b.lamps) shifted.push_back(lamp + a.cursor);
  Element r;
  std::set_symmetric_difference(a.lamps.begin(), a.lamps.end(), shifted.begin(),
                                shifted.end(), std::back_inserter(r.lamps));
  r.cursor = a.cursor + b.cursor;
  return encode(r);
}

Code LamplighterGroup::inv(Code x) const {
  Element a = decode(x);
  Element r;
  for (std::int64_t lamp : a.lamps) r.lamps.push_back(lamp - a.cursor);
  r.cursor = -a.cursor;
  return encode(r);
}

std::vector<std::string> LamplighterGroup::generator_names() const {
  return {"t", "a"};
}

Code LamplighterGroup::generator(unsigned i) const {
  Element e;
  if (i == 0) {
    e.cursor = 1;
  } else {
    e.lamps = {0};
  }
  return encode(e);
}

std::string LamplighterGroup::format(Code x) const {
  Element e = decode(x);
  std::string out = "{";
  for (std::size_t i = 0; i < e.lamps.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(e.lamps[i]);
  }
  return out + "}@" + std::to_string(e.cursor);
}

// ---------------------------------------------------------------------------
// RedundantZ
// ---------------------------------------------------------------------------

namespace {

// (4^len - 1) / 3, the first code of length len.
std::uint64_t quaternary_offset(std::size_t len) {
  std::uint64_t off = 0, pow = 1;
  for (std::size_t l = 0; l < len; ++l) {
    off = checked_add(off, pow);
    pow = checked_mul(pow, 4);
  }
  return off;
}

}  // namespace

std::vector<unsigned> RedundantZ::spelling(Code x) const {
  std::uint64_t c = value(x);
  std::size_t len = 0;
  std::uint64_t offset = 0, count = 1;
  while (c - offset >= count) {
    offset += count;
    ++len;
    if (count > std::numeric_limits<std::uint64_t>::max() / 4) break;
    count *= 4;
  }
  std::uint64_t r = c - offset;
  std::vector<unsigned> letters(len);
  for (std::size_t p = len; p-- > 0;) {
    letters[p] = static_cast<unsigned>(r % 4);
    r /= 4;
  }
  return letters;
}

Code RedundantZ::spell(std::span<const unsigned> letters) const {
  std::uint64_t rank = 0;
  for (unsigned l : letters) rank = checked_add(checked_mul(rank, 4), l);
  return code(checked_add(quaternary_offset(letters.size()), rank));
}

std::int64_t RedundantZ::element(Code x) const {
  std::int64_t n = 0;
  for (unsigned l : spelling(x)) n += (l % 2 == 0) ? 1 : -1;
  return n;
}

Code RedundantZ::canonical_code(std::int64_t n) const {
  std::vector<unsigned> letters(static_cast<std::size_t>(n < 0 ? -n : n),
                                n < 0 ? 1U : 0U);
  return spell(letters);
}

Code RedundantZ::canonical(Code x) const { return canonical_code(element(x)); }

Code RedundantZ::mult(Code x, Code y) const {
  return canonical_code(element(x) + element(y));
}

Code RedundantZ::inv(Code x) const { return canonical_code(-element(x)); }

std::vector<std::string> RedundantZ::generator_names() const {
  return {"x", "y"};
}

Code RedundantZ::generator(unsigned i) const { return code(i == 0 ? 1 : 3); }

Code RedundantZ::word(std::span<const Letter> letters) const {
  std::vector<unsigned> spelled;
  for (const Letter& l : letters) spelled.push_back(2 * l.gen + (l.inverse ? 1 : 0));
  return spell(spelled);
}

std::string RedundantZ::format(Code x) const {
  static constexpr char kNames[] = {'x', 'X', 'y', 'Y'};
  auto letters = spelling(x);
  if (letters.empty()) return "e";
  std::string out;
  for (unsigned l : letters) out += kNames[l];
  return out;
}

// ---------------------------------------------------------------------------
// Spec parsing and Group
// ---------------------------------------------------------------------------

std::shared_ptr<const Family> parse_family(std::string_view spec) {
  spec = trim(spec);
  auto bad = [&]() -> Error {
    return Error(ErrorCode::kMalformedSpec,
                 "malformed group spec '" + std::string(spec) + "'");
  };
  if (spec == "lamplighter") return std::make_shared<LamplighterGroup>();
  if (spec == "redundant-z") return std::make_shared<RedundantZ>();
  auto colon = spec.find(':');
  if (colon == std::string_view::npos) throw bad();
  auto name = spec.substr(0, colon);
  auto arg = parse_uint(spec.substr(colon + 1));
  if (!arg) throw bad();
  if (name == "free") {
    if (*arg < 1 || *arg > 26) throw bad();
    return std::make_shared<FreeGroup>(static_cast<unsigned>(*arg));
  }
  if (name == "zd") {
    if (*arg < 1 || *arg > 26) throw bad();
    return std::make_shared<FreeAbelianGroup>(static_cast<unsigned>(*arg));
  }
  if (name == "cyclic") {
    if (*arg < 2) throw bad();
    return std::make_shared<CyclicGroup>(*arg);
  }
  throw bad();
}

Group::Group(std::shared_ptr<const Family> family, Mode mode)
    : family_(std::move(family)), mode_(mode) {}

bool Group::eq(Code x, Code y) const {
  if (mode_ != Mode::kComputable) {
    throw Error(ErrorCode::kWrongMode, "equality is not decidable in CE mode");
  }
  return family_->canonical(x) == family_->canonical(y);
}

Group make_group(std::string_view spec) {
  auto fam = parse_family(spec);
  Mode mode = fam->injective() ? Mode::kComputable : Mode::kCe;
  return Group(std::move(fam), mode);
}

Group as_ce(const Group& g) { return Group(g.family_ptr(), Mode::kCe); }

// ---------------------------------------------------------------------------
// Enumerations
// ---------------------------------------------------------------------------

EqCursor::EqCursor(const Group& g) : family_(g.family_ptr()) {}

std::optional<std::pair<Code, Code>> EqCursor::next() {
  std::uint64_t t = position_++;
  if (family_->injective()) {
    Code c = code(t);
    if (!family_->valid(c)) return std::nullopt;
    return std::pair{c, c};
  }
  return (t % 2 == 0) ? star_entry(t / 2) : full_entry(t / 2);
}

std::optional<std::pair<Code, Code>> EqCursor::star_entry(std::uint64_t i) {
  Code c = code(i / 2);
  if (!family_->valid(c)) return std::nullopt;
  if (i % 2 == 0) return std::pair{c, c};
  Code canon = family_->canonical(c);
  if (canon == c) return std::nullopt;
  return std::pair{canon, c};
}

std::optional<std::pair<Code, Code>> EqCursor::full_entry(std::uint64_t i) {
  auto [a, b] = coding::cantor_unpair(i);
  Code x = code(a), y = code(b);
  if (a == b || !family_->valid(x) || !family_->valid(y)) return std::nullopt;
  if (family_->canonical(x) != family_->canonical(y)) return std::nullopt;
  return std::pair{x, y};
}

MultTCursor::MultTCursor(const Group& g) : family_(g.family_ptr()) {}

std::optional<Triple> MultTCursor::next() {
  std::uint64_t t = position_++;
  if (family_->injective() || t % 2 == 0) return stream_a();
  return stream_b();
}

std::optional<Triple> MultTCursor::stream_a() {
  auto [i, j] = coding::cantor_unpair(a_index_++);
  Code x = code(i), y = code(j);
  if (!family_->valid(x) || !family_->valid(y)) return std::nullopt;
  return Triple{x, y, family_->mult(x, y)};
}

std::optional<Triple> MultTCursor::stream_b() {
  Triple t{code(bi_), code(bj_), code(bk_)};
  // Advance to the next triple with max(i, j, k) == shell_.
  if (std::max(bi_, bj_) == shell_ && bk_ < shell_) {
    ++bk_;
  } else {
    if (++bj_ > shell_) {
      bj_ = 0;
      if (++bi_ > shell_) {
        ++shell_;
        bi_ = 0;
      }
    }
    bk_ = std::max(bi_, bj_) == shell_ ? 0 : shell_;
  }
  if (!family_->valid(t.x) || !family_->valid(t.y) || !family_->valid(t.z)) {
    return std::nullopt;
  }
  Code product = family_->mult(t.x, t.y);
  if (t.z == product || family_->canonical(t.z) != family_->canonical(product)) {
    return std::nullopt;
  }
  return t;
}

EqDecision eq_semidecide(const Group& g, Code x, Code y, Budget budget) {
  if (x == y) return {EqOutcome::kEqual, 0};
  EqCursor cursor(g);
  for (std::uint64_t s = 0; s < budget.steps; ++s) {
    auto pair = cursor.next();
    if (!pair) continue;
    if ((pair->first == x && pair->second == y) ||
        (pair->first == y && pair->second == x)) {
      return {EqOutcome::kEqual, s + 1};
    }
  }
  return {EqOutcome::kUnknown, budget.steps};
}

CodeSet ball(const Group& g, const CodeSet& gens, unsigned radius,
             StepMeter* meter) {
  std::vector<Code> steps;
  for (Code s : gens) {
    steps.push_back(s);
    steps.push_back(g.inv(s));
  }
  steps = make_set(std::move(steps));
  std::unordered_set<Code> seen{g.identity()};
  std::vector<Code> frontier{g.identity()};
  for (unsigned r = 0; r < radius && !frontier.empty(); ++r) {
    std::vector<Code> next;
    for (Code f : frontier) {
      for (Code s : steps) {
        if (meter && !meter->charge()) return make_set({seen.begin(), seen.end()});
        Code p = g.mult(s, f);
        if (seen.insert(p).second) next.push_back(p);
      }
    }
    frontier = std::move(next);
  }
  return make_set({seen.begin(), seen.end()});
}

// ---------------------------------------------------------------------------
// Literals
// ---------------------------------------------------------------------------

Code parse_element(const Group& g, std::string_view text) {
  text = trim(text);
  if (text.empty()) malformed_input(text);
  const Family& fam = g.family();
  if (auto lit = fam.literal(text)) return *lit;
  if (text == "e" || text == "1") return g.identity();

  auto names = fam.generator_names();
  std::vector<Letter> letters;
  std::size_t i = 0;
  while (i < text.size()) {
    char ch = text[i++];
    if (std::isspace(static_cast<unsigned char>(ch))) continue;
    std::optional<Letter> letter;
    for (unsigned gi = 0; gi < names.size(); ++gi) {
      char name = names[gi][0];
      if (ch == name) letter = Letter{gi, false};
      if (ch == static_cast<char>(std::toupper(static_cast<unsigned char>(name)))) {
        letter = Letter{gi, true};
      }
    }
    if (!letter) malformed_input(text);
    std::int64_t power = 1;
    if (i < text.size() && text[i] == '^') {
      std::size_t j = i + 1;
      if (j < text.size() && (text[j] == '-' || text[j] == '+')) ++j;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      auto p = parse_int(text.substr(i + 1, j - i - 1));
      if (!p) malformed_input(text);
      power = *p;
      i = j;
    }
    if (power < 0) {
      letter->inverse = !letter->inverse;
      power = -power;
    }
    if (power > 1'000'000) malformed_input(text);
    for (std::int64_t p = 0; p < power; ++p) letters.push_back(*letter);
  }
  Code c = fam.word(letters);
  if (!fam.valid(c)) malformed_input(text);
  return c;
}

std::vector<Code> parse_element_list(const Group& g, std::string_view text) {
  std::vector<Code> out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i < text.size()) {
      if (text[i] == '(') ++depth;
      if (text[i] == ')') --depth;
    }
    if (i == text.size() || (text[i] == ',' && depth == 0)) {
      auto part = trim(text.substr(start, i - start));
      if (!part.empty()) out.push_back(parse_element(g, part));
      start = i + 1;
    }
  }
  return out;
}

}  // namespace amenlab
