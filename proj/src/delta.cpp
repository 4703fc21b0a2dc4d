#include "paritycf/delta.hpp"

#include <cctype>
#include <stdexcept>

namespace paritycf {

std::string_view to_string(CutLetter c) {
  switch (c) {
    case CutLetter::L: return "L";
    case CutLetter::Linv: return "L^-1";
    case CutLetter::R: return "R";
  }
  return "?";
}

const Mat2& cut_matrix(CutLetter c) {
  switch (c) {
    case CutLetter::L: return matrix_L();
    case CutLetter::Linv: return matrix_L_inv();
    case CutLetter::R: return matrix_R();
  }
  return matrix_L();
}

DeltaStream DeltaStream::from_rcf(RcfStream rcf) {
  DeltaStream s;
  s.a0_abs_ = ::abs(rcf.term(0));
  s.rcf_.emplace(std::move(rcf));
  return s;
}

DeltaStream DeltaStream::geometric(const QuadraticSurd& x) {
  if (x.is_rational()) throw RationalInputError("Delta-expansion of rational " + x.str());
  DeltaStream s;
  s.a0_abs_ = ::abs(x.floor());
  s.point_ = x;
  return s;
}

void DeltaStream::extend() {
  if (point_) {
    const QuadraticSurd& x = *point_;
    Sym a;
    if (x.sign() < 0) {
      a = Sym::One;
    } else if (sign_affine(x, 1, -1) > 0) {
      a = Sym::Zero;
    } else {
      a = Sym::Inf;
    }
    point_ = moebius_apply(reflection(a), x).value();
    symbols_.push_back(a);
    return;
  }
  // Next letter of the cutting sequence.
  for (;;) {
    const BigInt& t = rcf_->term(term_);
    const BigInt run = term_ == 0 ? BigInt(::abs(t)) : t;
    if (used_in_term_ < run) break;
    ++term_;
    used_in_term_ = 0;
  }
  const BigInt& a0 = rcf_->term(0);
  CutLetter c;
  if (term_ == 0) {
    c = a0 < 0 ? CutLetter::Linv : CutLetter::L;
  } else {
    c = term_ % 2 == 1 ? CutLetter::R : CutLetter::L;
  }
  ++used_in_term_;
  const Sym eta = c == CutLetter::L ? Sym::Zero : c == CutLetter::Linv ? Sym::One : Sym::Inf;
  const Gamma g = c == CutLetter::R ? Gamma::JKJ : Gamma::K;
  const PermS3& cum = cum_.back();
  symbols_.push_back(cum(eta));
  letters_.push_back(c);
  s_.push_back(g);
  cum_.push_back(cum.after(gamma_perm(g)));
}

Sym DeltaStream::symbol(std::size_t m) {
  if (m == 0) throw std::out_of_range("Delta symbols are 1-based");
  while (symbols_.size() < m) extend();
  return symbols_[m - 1];
}

std::vector<Sym> DeltaStream::prefix(std::size_t m) {
  if (m > 0) symbol(m);
  return {symbols_.begin(), symbols_.begin() + static_cast<std::ptrdiff_t>(m)};
}

CutLetter DeltaStream::letter(std::size_t m) {
  if (!rcf_) throw std::logic_error("cutting letters need a continued-fraction stream");
  symbol(m);
  return letters_[m - 1];
}

Sym DeltaStream::eta(std::size_t m) {
  const CutLetter c = letter(m);
  return c == CutLetter::L ? Sym::Zero : c == CutLetter::Linv ? Sym::One : Sym::Inf;
}

Gamma DeltaStream::s_letter(std::size_t m) {
  letter(m);
  return s_[m - 1];
}

PermS3 DeltaStream::cum_perm(std::size_t m) {
  if (!rcf_) throw std::logic_error("cumulative permutation needs a continued-fraction stream");
  if (m > 0) symbol(m);
  return cum_[m];
}

const Mat2& DeltaStream::prefix_matrix(std::size_t m) {
  while (prefix_.size() <= m) {
    const Sym a = symbol(prefix_.size());
    prefix_.push_back(prefix_.back() * reflection(a));
  }
  return prefix_[m];
}

// ---------------------------------------------------------------- words

void DeltaWord::validate() const {
  if (cycle.first == cycle.second) throw std::invalid_argument("Delta-word cycle needs two distinct symbols");
  for (std::size_t i = 1; i < prefix.size(); ++i) {
    if (prefix[i] == prefix[i - 1]) throw std::invalid_argument("Delta-word has equal adjacent symbols");
  }
  if (!prefix.empty() && prefix.back() == cycle.first) {
    throw std::invalid_argument("Delta-word prefix ends with the cycle's first symbol");
  }
}

DeltaWord DeltaWord::canonical() const {
  validate();
  DeltaWord w = *this;
  while (!w.prefix.empty() && w.prefix.back() == w.cycle.second) {
    const Sym y = w.prefix.back();
    w.prefix.pop_back();
    w.cycle = {y, w.cycle.first};
  }
  if (w.cycle.second < w.cycle.first) std::swap(w.cycle.first, w.cycle.second);
  return w;
}

std::string DeltaWord::str() const {
  std::string s;
  for (Sym a : prefix) {
    s += to_string(a);
    s += ',';
  }
  s += '(';
  s += to_string(cycle.first);
  s += ',';
  s += to_string(cycle.second);
  s += ")*";
  return s;
}

namespace {

class WordParser {
 public:
  explicit WordParser(std::string_view s) : s_(s) {}

  DeltaWord parse() {
    DeltaWord w;
    for (;;) {
      skip();
      if (peek() == '(') {
        ++pos_;
        const Sym x = sym();
        expect(',');
        const Sym y = sym();
        expect(')');
        expect('*');
        skip();
        if (pos_ != s_.size()) fail("trailing characters after the periodic tail");
        w.cycle = {x, y};
        break;
      }
      w.prefix.push_back(sym());
      expect(',');
    }
    try {
      w.validate();
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what(), 0);
    }
    return w;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg + " at offset " + std::to_string(pos_), pos_);
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])) != 0) ++pos_;
  }
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  void expect(char c) {
    skip();
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }
  Sym sym() {
    skip();
    for (std::string_view tok : {"inf", "0", "1"}) {
      if (s_.substr(pos_, tok.size()) == tok) {
        pos_ += tok.size();
        return *sym_from_string(tok);
      }
    }
    fail("expected 0, 1 or inf");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

DeltaWord parse_delta_word(std::string_view text) { return WordParser(text).parse(); }

std::optional<Rational> delta_word_eval(const DeltaWord& w) {
  w.validate();
  std::optional<Rational> v;
  const Sym z = third(w.cycle.first, w.cycle.second);
  if (z == Sym::Zero) v = Rational(0);
  if (z == Sym::One) v = Rational(1);
  for (auto it = w.prefix.rbegin(); it != w.prefix.rend(); ++it) v = moebius_apply_rational(reflection(*it), v);
  return v;
}

bool same_value(const DeltaWord& u, const DeltaWord& v) { return u.canonical() == v.canonical(); }

Cylinder cylinder(DeltaStream& s, std::size_t m) {
  Cylinder c;
  c.word = s.prefix(m);
  const Sym a = c.word.back();
  c.beta = a == Sym::Zero ? Sym::One : Sym::Zero;
  c.gamma = third(a, c.beta);
  const Mat2 p = s.prefix_matrix(m - 1);
  c.end_beta = apply_to_cusp(p, c.beta);
  c.end_gamma = apply_to_cusp(p, c.gamma);
  return c;
}

}  // namespace paritycf
