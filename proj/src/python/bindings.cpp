#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "ordext/bruhat.hpp"
#include "ordext/cli.hpp"
#include "ordext/error.hpp"
#include "ordext/ext.hpp"
#include "ordext/nilpotent.hpp"
#include "ordext/ordparts.hpp"

namespace py = pybind11;
using namespace ordext;

namespace {

CharacterSpace space(const RootDatum& rd, const std::string& field, const std::string& coeff) {
  LocalFieldParams F = parse_field(field);
  return CharacterSpace{F, parse_coefficients(coeff, F.p), rd.rank};
}

py::dict verdict_dict(const DimResult& r) {
  py::dict d;
  d["verdict"] = r.str();
  d["dim"] = r.dim;
  d["pinned"] = r.is_pinned();
  d["hypotheses"] = r.hypotheses_used;
  d["source"] = r.source;
  d["annotation"] = r.annotation ? py::cast(*r.annotation) : py::none();
  return d;
}

NilMatrix nil_from(const std::vector<std::vector<std::string>>& rows) {
  NilMatrix m(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows.size()) throw Error(ErrorKind::InvalidArgument, "matrix must be square");
    for (std::size_t j = 0; j < rows.size(); ++j) {
      m.at(i, j) = Rational(rows[i][j]);
      m.at(i, j).canonicalize();
    }
  }
  return m;
}

std::vector<std::vector<std::string>> nil_to(const NilMatrix& m) {
  std::vector<std::vector<std::string>> out(m.size(), std::vector<std::string>(m.size()));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j) out[i][j] = m.at(i, j).get_str();
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "root data, Weyl groups, ordinary parts and Ext verdicts";

  static py::handle exc = py::exception<Error>(m, "OrdextError").release();
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::set_error(exc, e.what());
    }
  });

  m.def("preset_names", &preset_names);
  m.def("rootdata_json", [](const std::string& datum) { return to_json(resolve_datum(datum)).dump(); });
  m.def("is_center_connected", [](const std::string& d) { return is_center_connected(resolve_datum(d)); });
  m.def("is_derived_simply_connected",
        [](const std::string& d) { return is_derived_simply_connected(resolve_datum(d)); });
  m.def("twisting_element", [](const std::string& d) -> std::optional<IntVec> {
    auto t = twisting_element(resolve_datum(d));
    return t ? std::optional<IntVec>(t->theta) : std::nullopt;
  });
  m.def("rho", [](const std::string& d) {
    std::vector<std::string> out;
    for (const auto& x : rho(resolve_datum(d))) out.push_back(x.get_str());
    return out;
  });

  m.def("weyl_table", [](const std::string& datum) {
    WeylGroup g(resolve_datum(datum));
    WeylTable t = g.enumerate();
    py::list rows;
    for (std::size_t i = 0; i < t.size(); ++i)
      rows.append(py::make_tuple(format_word(t.words[i]), t.lengths[i], g.alpha_w(t.elements[i])));
    return rows;
  });
  m.def("alpha_w", [](const std::string& datum, const std::string& word) {
    WeylGroup g(resolve_datum(datum));
    return g.alpha_w(g.from_word(parse_word(word, g.num_simple())));
  });
  m.def("alpha_k_sequence", [](const std::string& datum, const std::string& word) {
    WeylGroup g(resolve_datum(datum));
    Word w = parse_word(word, g.num_simple());
    return alpha_k_sequence(g, g.from_word(w), w).alpha;
  });
  m.def("bruhat_leq", [](const std::string& datum, const std::string& u, const std::string& w) {
    WeylGroup g(resolve_datum(datum));
    return g.bruhat_leq(g.from_word(parse_word(u, g.num_simple())), g.from_word(parse_word(w, g.num_simple())));
  });
  m.def("filtration_sizes", [](const std::string& datum, const std::vector<std::size_t>& I) {
    WeylGroup g(resolve_datum(datum));
    std::vector<std::size_t> zero_based;
    for (auto i : I) zero_based.push_back(i - 1);
    return (zero_based.empty() ? bruhat_filtration(g) : parabolic_filtration(g, zero_based)).grade_sizes();
  }, py::arg("datum"), py::arg("I") = std::vector<std::size_t>{});

  m.def("hn_ord_census", [](const std::string& datum, const std::string& field, const std::string& coeff,
                            const std::string& chi, Int max_n) {
    WeylGroup g(resolve_datum(datum));
    CharacterSpace S = space(g.datum(), field, coeff);
    TorusCharacter c = chi.empty() ? torus_trivial(S) : parse_character(S, chi);
    std::vector<std::size_t> out;
    for (Int n = 0; n <= max_n; ++n) out.push_back(hn_ord_principal(g, S, c, n).size());
    return out;
  }, py::arg("datum"), py::arg("field"), py::arg("coeff"), py::arg("chi") = "", py::arg("max_n") = 4);

  m.def("ext1", [](const std::string& datum, const std::string& field, const std::string& coeff,
                   const std::string& chi_prime, const std::string& chi, const std::string& kind) {
    WeylGroup g(resolve_datum(datum));
    CharacterSpace S = space(g.datum(), field, coeff);
    if (kind != "modp" && kind != "unitary") throw Error(ErrorKind::InvalidArgument, "kind is modp or unitary");
    return verdict_dict(ext1_principal(g, S, parse_character(S, chi_prime), parse_character(S, chi),
                                       kind == "modp" ? CoeffKind::ModP : CoeffKind::Unitary));
  }, py::arg("datum"), py::arg("field"), py::arg("coeff"), py::arg("chi_prime"), py::arg("chi"),
        py::arg("kind") = "modp");

  m.def("extn", [](const std::string& datum, const std::string& field, const std::string& coeff,
                   const std::string& chi_prime, const std::string& chi, Int n) {
    WeylGroup g(resolve_datum(datum));
    CharacterSpace S = space(g.datum(), field, coeff);
    ExtnResult r = extn_principal(g, S, parse_character(S, chi_prime), parse_character(S, chi), n);
    py::dict d = verdict_dict(r.result);
    d["page"] = to_json(r.page).dump();
    d["degenerates"] = r.page.degenerates;
    return d;
  });

  m.def("apply_weyl", [](const std::string& datum, const std::string& field, const std::string& coeff,
                         const std::string& word, const std::string& chi) {
    WeylGroup g(resolve_datum(datum));
    CharacterSpace S = space(g.datum(), field, coeff);
    return format_character(S, weyl_act(g, S, g.from_word(parse_word(word, g.num_simple())), parse_character(S, chi)));
  });

  m.def("bch", [](const std::vector<std::vector<std::string>>& x, const std::vector<std::vector<std::string>>& y,
                  Int p) { return nil_to(bch(nil_from(x), nil_from(y), p)); });
  m.def("bch_series_eval", [](const std::vector<std::vector<std::string>>& x,
                              const std::vector<std::vector<std::string>>& y) {
    NilMatrix a = nil_from(x);
    return nil_to(bch_series(a.size() > 0 ? a.size() - 1 : 0).evaluate(a, nil_from(y)));
  });
  m.def("congruence_report", [](std::size_t n, Int p, Int c, std::size_t samples, std::uint64_t seed) {
    return to_json(congruence_harness(make_standard_family(n, p, c), samples, seed)).dump();
  });

  m.def("run_cli", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = cli::run(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  });
}
