#include "paritycf/paritycf.h"

#include <cstring>
#include <deque>
#include <memory>
#include <new>
#include <string>
#include <vector>

#include "paritycf/cfmaps.hpp"
#include "paritycf/report.hpp"
#include "paritycf/verify.hpp"

using namespace paritycf;

struct pcf_input {
  RealInput x;
  std::string text;
};

namespace {

struct RowStore {
  std::string value, numerator, denominator, k, word;
  pcf_row row{};
};

struct CylStore {
  std::string word, beta, gamma;
  pcf_cylinder c{};
};

struct StepStore {
  std::string input, output, branch, relabel, m;
  pcf_map_step s{};
};

struct CheckStore {
  std::string name, detail;
  pcf_check c{};
};

thread_local std::string g_error;
thread_local long g_position = -1;

pcf_status fail(pcf_status s, const std::string& msg, long pos = -1) {
  g_error = msg;
  g_position = pos;
  return s;
}

template <class F>
pcf_status guarded(F&& f) {
  g_error.clear();
  g_position = -1;
  try {
    return f();
  } catch (const ParseError& e) {
    return fail(PCF_ERR_PARSE, e.what(), static_cast<long>(e.position()));
  } catch (const RationalInputError& e) {
    return fail(PCF_ERR_RATIONAL, e.what());
  } catch (const PrecisionExhausted& e) {
    return fail(PCF_ERR_PRECISION, e.what());
  } catch (const RouteMismatch& e) {
    return fail(PCF_ERR_MISMATCH, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(PCF_ERR_ARGUMENT, e.what());
  } catch (const std::out_of_range& e) {
    return fail(PCF_ERR_ARGUMENT, e.what());
  } catch (const std::bad_alloc&) {
    return fail(PCF_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(PCF_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(PCF_ERR_INTERNAL, "unknown error");
  }
}

int sym_code(Sym s) { return static_cast<int>(s); }

std::string point_text(const std::optional<Rational>& r) { return r ? r->str() : "inf"; }

std::string join_syms(const std::vector<Sym>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ',';
    out += to_string(v[i]);
  }
  return out;
}

}  // namespace

struct pcf_table {
  std::deque<RowStore> rows;
};

struct pcf_delta {
  std::vector<Sym> symbols;
  std::string text;
  std::deque<CylStore> cylinders;
};

struct pcf_orbit {
  std::deque<StepStore> steps;
};

struct pcf_report {
  std::deque<CheckStore> items;
  bool ok = true;
};

namespace {

pcf_table* make_table(const std::vector<ReportRow>& rows) {
  auto t = std::make_unique<pcf_table>();
  for (const ReportRow& r : rows) {
    RowStore& s = t->rows.emplace_back();
    const ApproxRecord& a = r.record;
    s.value = a.value.str();
    s.numerator = a.value.num().get_str();
    s.denominator = a.value.den().get_str();
    s.k = a.k.get_str();
    s.row.value = s.value.c_str();
    s.row.numerator = s.numerator.c_str();
    s.row.denominator = s.denominator.c_str();
    s.row.classified = r.classified ? 1 : 0;
    s.row.kind = a.kind == Kind::Principal ? 0 : 1;
    s.row.n = a.n;
    s.row.k = s.k.c_str();
    s.row.parity = sym_code(a.parity);
    s.row.in_b = a.in_B;
    s.row.in_s = a.in_S;
    s.row.s_class = a.s_class ? sym_code(*a.s_class) : PCF_SYM_NONE;
    for (std::size_t j = 0; j < PCF_MEMBERSHIPS; ++j) s.row.member[j] = a.memberships[j];
    if (r.word) {
      s.word = r.word->str();
      s.row.delta_word = s.word.c_str();
      s.row.m = static_cast<long>(r.m);
    }
  }
  return t.release();
}

bool parse_count(const char* text, BigInt& out) {
  if (!text) return false;
  std::string s(text);
  if (s.empty()) {
    out = 0;
    return true;
  }
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  out = BigInt(s, 10);
  return true;
}

}  // namespace

extern "C" {

const char* pcf_version(void) { return PARITYCF_VERSION; }

const char* pcf_status_name(pcf_status s) {
  switch (s) {
    case PCF_OK: return "ok";
    case PCF_ERR_ARGUMENT: return "argument";
    case PCF_ERR_PARSE: return "parse";
    case PCF_ERR_PRECISION: return "precision";
    case PCF_ERR_MISMATCH: return "mismatch";
    case PCF_ERR_IO: return "io";
    case PCF_ERR_RATIONAL: return "rational";
    case PCF_ERR_INTERNAL: return "internal";
  }
  return "unknown";
}

const char* pcf_last_error(void) { return g_error.c_str(); }
long pcf_last_error_position(void) { return g_position; }

const char* pcf_symbol_name(int sym) {
  switch (sym) {
    case PCF_SYM_0: return "0";
    case PCF_SYM_1: return "1";
    case PCF_SYM_INF: return "inf";
    default: return "";
  }
}

pcf_status pcf_input_parse(const char* text, pcf_input** out) {
  return guarded([&] {
    if (!text || !out) return fail(PCF_ERR_ARGUMENT, "null argument");
    RealInput x = parse_input(text);
    *out = new pcf_input{x, x.str()};
    return PCF_OK;
  });
}

pcf_status pcf_input_sample(uint64_t seed, uint64_t index, int unit, pcf_input** out) {
  return guarded([&] {
    if (!out) return fail(PCF_ERR_ARGUMENT, "null argument");
    RealInput x = RealInput::surd(unit ? sample_unit_surd(seed, index) : sample_surd(seed, index));
    *out = new pcf_input{x, x.str()};
    return PCF_OK;
  });
}

void pcf_input_free(pcf_input* x) { delete x; }
const char* pcf_input_text(const pcf_input* x) { return x ? x->text.c_str() : ""; }
int pcf_input_is_exact(const pcf_input* x) { return x && x->x.is_surd() ? 1 : 0; }
double pcf_input_approx(const pcf_input* x) { return x ? x->x.approx() : 0.0; }

const char* pcf_membership_name(size_t j) {
  return j < PCF_MEMBERSHIPS ? to_string(kMembershipSets[j]).data() : "";
}

pcf_status pcf_approximations(const pcf_input* x, const char* set, pcf_route route, pcf_limit_mode mode,
                              const char* limit_value, pcf_table** out) {
  return guarded([&] {
    if (!x || !set || !out) return fail(PCF_ERR_ARGUMENT, "null argument");
    const auto id = set_from_string(set);
    if (!id) return fail(PCF_ERR_ARGUMENT, std::string("unknown set '") + set + "'");
    if (route < PCF_ROUTE_RCF || route > PCF_ROUTE_ALL) return fail(PCF_ERR_ARGUMENT, "unknown route");
    BigInt value;
    if (!parse_count(limit_value, value)) return fail(PCF_ERR_ARGUMENT, "limit must be a non-negative integer");
    const Limit limit = mode == PCF_LIMIT_COUNT ? Limit::count(value) : Limit::denominator(value);
    *out = make_table(approximation_table(x->x, *id, static_cast<Route>(route), limit));
    return PCF_OK;
  });
}

size_t pcf_table_size(const pcf_table* t) { return t ? t->rows.size() : 0; }

pcf_status pcf_table_row(const pcf_table* t, size_t i, pcf_row* out) {
  if (!t || !out || i >= t->rows.size()) return fail(PCF_ERR_ARGUMENT, "row index out of range");
  *out = t->rows[i].row;
  return PCF_OK;
}

void pcf_table_free(pcf_table* t) { delete t; }

pcf_status pcf_delta_expand(const pcf_input* x, size_t terms, unsigned flags, pcf_delta** out) {
  return guarded([&] {
    if (!x || !out) return fail(PCF_ERR_ARGUMENT, "null argument");
    const bool geometric = (flags & PCF_DELTA_GEOMETRIC) != 0;
    if (geometric && !x->x.is_surd()) {
      return fail(PCF_ERR_ARGUMENT, "the geometric route needs an exact quadratic surd");
    }
    DeltaStream s = geometric ? DeltaStream::geometric(x->x.value()) : DeltaStream::from_rcf(RcfStream(x->x));
    auto d = std::make_unique<pcf_delta>();
    d->symbols = s.prefix(terms);
    d->text = join_syms(d->symbols);
    if (flags & PCF_DELTA_CYLINDERS) {
      for (std::size_t m = 1; m <= terms; ++m) {
        const Cylinder c = cylinder(s, m);
        CylStore& st = d->cylinders.emplace_back();
        st.word = join_syms(c.word);
        st.beta = point_text(c.end_beta);
        st.gamma = point_text(c.end_gamma);
        st.c.word = st.word.c_str();
        st.c.end_beta = st.beta.c_str();
        st.c.end_gamma = st.gamma.c_str();
        st.c.beta = sym_code(c.beta);
        st.c.gamma = sym_code(c.gamma);
        st.c.beta_infinite = !c.end_beta;
        st.c.gamma_infinite = !c.end_gamma;
        st.c.beta_approx = c.end_beta ? c.end_beta->get().get_d() : 0.0;
        st.c.gamma_approx = c.end_gamma ? c.end_gamma->get().get_d() : 0.0;
      }
    }
    *out = d.release();
    return PCF_OK;
  });
}

size_t pcf_delta_size(const pcf_delta* d) { return d ? d->symbols.size() : 0; }

int pcf_delta_symbol(const pcf_delta* d, size_t i) {
  return d && i < d->symbols.size() ? sym_code(d->symbols[i]) : PCF_SYM_NONE;
}

const char* pcf_delta_text(const pcf_delta* d) { return d ? d->text.c_str() : ""; }

pcf_status pcf_delta_cylinder(const pcf_delta* d, size_t i, pcf_cylinder* out) {
  if (!d || !out) return fail(PCF_ERR_ARGUMENT, "null argument");
  if (i >= d->cylinders.size()) return fail(PCF_ERR_ARGUMENT, "cylinder index out of range (expanded with cylinders?)");
  *out = d->cylinders[i].c;
  return PCF_OK;
}

void pcf_delta_free(pcf_delta* d) { delete d; }

pcf_status pcf_delta_word_value(const char* word, char* buf, size_t cap, size_t* len) {
  return guarded([&] {
    if (!word) return fail(PCF_ERR_ARGUMENT, "null argument");
    const std::string v = point_text(delta_word_eval(parse_delta_word(word)));
    if (len) *len = v.size();
    if (buf && cap > 0) {
      const std::size_t n = std::min(cap - 1, v.size());
      std::memcpy(buf, v.data(), n);
      buf[n] = '\0';
    }
    return PCF_OK;
  });
}

pcf_status pcf_map_orbit(const pcf_input* x, const char* map, size_t steps, pcf_orbit** out) {
  return guarded([&] {
    if (!x || !map || !out) return fail(PCF_ERR_ARGUMENT, "null argument");
    const auto kind = map_from_string(map);
    if (!kind) return fail(PCF_ERR_ARGUMENT, std::string("unknown map '") + map + "'");
    if (!x->x.is_surd()) return fail(PCF_ERR_ARGUMENT, "maps need an exact quadratic surd");
    auto o = std::make_unique<pcf_orbit>();
    for (const MapStep& st : map_orbit(*kind, x->x.value(), steps)) {
      StepStore& s = o->steps.emplace_back();
      s.input = st.input.str();
      s.output = st.output.str();
      s.branch = st.branch.str();
      s.relabel = to_string(st.relabel);
      s.m = st.m.get_str();
      s.s.input = s.input.c_str();
      s.s.output = s.output.c_str();
      s.s.branch = s.branch.c_str();
      s.s.consumed = st.consumed;
      s.s.relabel = s.relabel.c_str();
      s.s.m = s.m.c_str();
    }
    *out = o.release();
    return PCF_OK;
  });
}

size_t pcf_orbit_size(const pcf_orbit* o) { return o ? o->steps.size() : 0; }

pcf_status pcf_orbit_step(const pcf_orbit* o, size_t i, pcf_map_step* out) {
  if (!o || !out || i >= o->steps.size()) return fail(PCF_ERR_ARGUMENT, "step index out of range");
  *out = o->steps[i].s;
  return PCF_OK;
}

void pcf_orbit_free(pcf_orbit* o) { delete o; }

pcf_status pcf_map_recover(const pcf_input* x, const char* which, size_t count, pcf_table** out) {
  return guarded([&] {
    if (!x || !which || !out) return fail(PCF_ERR_ARGUMENT, "null argument");
    const std::string w(which);
    if (w != "even" && w != "oddodd") return fail(PCF_ERR_ARGUMENT, "recover expects 'even' or 'oddodd'");
    if (!x->x.is_surd()) return fail(PCF_ERR_ARGUMENT, "maps need an exact quadratic surd");
    const QuadraticSurd& s = x->x.value();
    if (s.sign() <= 0 || s.floor() != 0) return fail(PCF_ERR_ARGUMENT, "maps need x in (0, 1)");
    const bool even = w == "even";
    const std::vector<Rational> orbit = even ? even_inverse_orbit(s, count) : oddodd_inverse_orbit(s, count);
    *out = make_table(annotate(x->x, even ? SetId::B0Inf : SetId::B1, orbit));
    return PCF_OK;
  });
}

pcf_status pcf_oracle_check(const pcf_input* x, uint64_t seed, size_t samples, int64_t q_max, pcf_report** out) {
  return guarded([&] {
    if (!out) return fail(PCF_ERR_ARGUMENT, "null argument");
    if (q_max < 1) return fail(PCF_ERR_ARGUMENT, "q_max must be positive");
    VerifyOptions opt;
    opt.q_max = q_max;
    opt.seed = seed;
    std::vector<std::pair<RealInput, std::string>> inputs;  // labelled with the text the caller gave
    if (x) {
      inputs.emplace_back(x->x, x->text);
    } else {
      for (std::size_t i = 0; i < samples; ++i) {
        const RealInput in = RealInput::surd(sample_surd(seed, i));
        inputs.emplace_back(in, in.str());
      }
    }
    auto r = std::make_unique<pcf_report>();
    for (const auto& [in, label] : inputs) {
      for (CheckLine& line : verify_input(in, opt)) {
        CheckStore& c = r->items.emplace_back();
        c.name = label + ": " + line.name;
        c.detail = std::move(line.detail);
        c.c.name = c.name.c_str();
        c.c.detail = c.detail.c_str();
        c.c.ok = line.ok;
        r->ok = r->ok && line.ok;
      }
    }
    *out = r.release();
    return PCF_OK;
  });
}

size_t pcf_report_size(const pcf_report* r) { return r ? r->items.size() : 0; }

pcf_status pcf_report_item(const pcf_report* r, size_t i, pcf_check* out) {
  if (!r || !out || i >= r->items.size()) return fail(PCF_ERR_ARGUMENT, "item index out of range");
  *out = r->items[i].c;
  return PCF_OK;
}

int pcf_report_ok(const pcf_report* r) { return r && r->ok ? 1 : 0; }
void pcf_report_free(pcf_report* r) { delete r; }

pcf_status pcf_debug_inject_fault(const char* route) {
  return guarded([&] {
    if (!route || !*route) {
      inject_fault(std::nullopt);
      return PCF_OK;
    }
    const auto r = route_from_string(route);
    if (!r || *r == Route::All) return fail(PCF_ERR_ARGUMENT, std::string("cannot inject a fault into '") + route + "'");
    inject_fault(*r);
    return PCF_OK;
  });
}

}  // extern "C"
