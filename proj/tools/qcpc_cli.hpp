/*
 * Copyright 2026 The qcpc Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <CLI11.hpp>
#include <qcpc/basis_io.hpp>
#include <qcpc/qcpc.hpp>

#include <algorithm>
#include <chrono>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace qcpc::cli {

enum ExitCode : int { kOk = 0, kUsage = 1, kParse = 2, kPrecondition = 3, kMismatch = 4 };

enum class Format { pretty, json, csv };

struct CliConfig {
    std::string subcommand;
    std::optional<std::string> modulus; ///< base-field modulus for q = p^k, k > 1
    std::vector<std::string> inputs;
    std::string output;
    std::optional<Format> format;
    std::uint64_t guard = EnumerationOptions{}.guard;
    unsigned threads = 1;
    bool timing = false;
    Frame frame = Frame::codeword;
    std::uint64_t q = 2, m = 1, i = 0;
    std::int64_t ell_a = 1, m_a = 1, m_b = 1;
    std::optional<std::int64_t> a;
    char table = 'f';
};

/// Bad flag combinations found after parsing.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

namespace detail {

inline int exit_code_for(ErrorKind k) { return k == ErrorKind::Parse ? kParse : kPrecondition; }

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorKind::Parse, "cannot read '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline Json read_document(const std::string& path) { return parse_document(read_file(path)); }

inline Field base_field(const CliConfig& c) {
    const Field f = field_of_order(c.q);
    if (!c.modulus) return f;
    return Field(f.characteristic(), f.degree(), parse_prime_poly(*c.modulus, f.characteristic()));
}

inline Json report_to_json(const RgbReport& r) {
    Json v = Json::array();
    for (const auto& x : r.violations)
        v.push_back(Json{{"condition", static_cast<int>(x.condition)}, {"row", x.row}, {"col", x.col}});
    return Json{{"ok", r.ok}, {"violations", v}};
}

inline Json params_to_json(const ProductParams& p) {
    return Json{{"ell_a", p.ell_a}, {"m_a", p.m_a}, {"m_b", p.m_b}, {"a", p.a}, {"b", p.b}};
}

inline std::string pretty_rows(const std::vector<std::vector<Poly>>& rows) {
    std::string s;
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j)
            s += "g[" + std::to_string(i) + "][" + std::to_string(j) + "] = " + to_string(rows[i][j]) + "\n";
    return s;
}

inline Json level_or_null(const RgbPotBasis& b) {
    try {
        return level(b);
    } catch (const Error&) {
        return nullptr;
    }
}

struct Emitted {
    std::string text;
    int code = kOk;
};

inline Format format_or(const CliConfig& c, Format fallback, std::initializer_list<Format> allowed) {
    const Format f = c.format.value_or(fallback);
    if (std::find(allowed.begin(), allowed.end(), f) == allowed.end())
        throw UsageError("format not supported by '" + c.subcommand + "'");
    return f;
}

inline Emitted cmd_cosets(const CliConfig& c) {
    const auto fmt = format_or(c, Format::pretty, {Format::pretty, Format::json});
    const auto cs = cyclotomic_cosets(c.q, c.m);
    if (fmt == Format::json) return {dump_document(Json{{"q", c.q}, {"m", c.m}, {"cosets", cs}})};
    std::string s;
    for (const auto& coset : cs) {
        s += "C_" + std::to_string(coset.front()) + " = {";
        for (std::size_t k = 0; k < coset.size(); ++k) s += (k ? "," : "") + std::to_string(coset[k]);
        s += "}\n";
    }
    return {s};
}

inline Emitted cmd_factor(const CliConfig& c) {
    const auto fmt = format_or(c, Format::pretty, {Format::pretty, Format::json});
    const Field f = base_field(c);
    const auto fs = factor_xm_minus_1(f, c.m);
    if (fmt == Format::json) {
        Json arr = Json::array();
        for (const auto& x : fs)
            arr.push_back(Json{{"representative", x.representative},
                               {"coset", cyclotomic_coset(c.q, c.m, x.representative)},
                               {"degree", x.poly.degree()},
                               {"poly", to_string(x.poly)}});
        return {dump_document(Json{{"q", c.q}, {"m", c.m}, {"field", field_to_json(f)}, {"factors", arr}})};
    }
    std::string s;
    for (const auto& x : fs) s += "m_" + std::to_string(x.representative) + " = " + to_string(x.poly) + "\n";
    return {s};
}

inline Emitted cmd_minpoly(const CliConfig& c) {
    const auto fmt = format_or(c, Format::pretty, {Format::pretty, Format::json});
    const Field f = base_field(c);
    const Poly p = minimal_polynomial(f, c.m, c.i);
    if (fmt == Format::json)
        return {dump_document(Json{{"q", c.q},
                                   {"m", c.m},
                                   {"i", c.i},
                                   {"coset", cyclotomic_coset(c.q, c.m, c.i % c.m)},
                                   {"poly", to_string(p)}})};
    return {to_string(p) + "\n"};
}

inline Json reduced_document(const RgbPotBasis& b) {
    Json j = to_json(b);
    j["dimension"] = dimension(b);
    j["level"] = level_or_null(b);
    j["conditions"] = report_to_json(is_rgb_pot(b));
    return j;
}

inline Emitted cmd_reduce(const CliConfig& c) {
    const auto fmt = format_or(c, Format::pretty, {Format::pretty, Format::json});
    const auto b = rgb_pot_reduce(generating_matrix_from_json(read_document(c.inputs.at(0))));
    if (fmt == Format::json) return {dump_document(reduced_document(b))};
    const auto r = is_rgb_pot(b);
    return {pretty_rows(b.entries()) + "k = " + std::to_string(dimension(b)) + "\nconditions: " +
            (r.ok ? "ok" : std::to_string(r.violations.size()) + " violated") + "\n"};
}

inline Emitted cmd_product(const CliConfig& c) {
    const auto fmt = format_or(c, Format::pretty, {Format::pretty, Format::json});
    const auto A = rgb_pot_reduce(generating_matrix_from_json(read_document(c.inputs.at(0))));
    const auto B = cyclic_code_from_json(read_document(c.inputs.at(1)));
    const auto p = bezout_pair(static_cast<std::int64_t>(A.ell()), static_cast<std::int64_t>(A.m()),
                               static_cast<std::int64_t>(B.length()));
    const auto unreduced = unreduced_product_basis(A, B, p, c.frame);
    const auto reduced = rgb_pot_reduce(unreduced);
    std::optional<RgbPotBasis> one;
    if (level_or_null(A) == Json(1)) one = one_level_product_rgb(one_level_from_basis(A), B, p, c.frame).basis();
    if (fmt == Format::json) {
        return {dump_document(Json{{"params", params_to_json(p)},
                                   {"frame", c.frame == Frame::codeword ? "codeword" : "shifted"},
                                   {"unreduced", to_json(unreduced)},
                                   {"reduced", reduced_document(reduced)},
                                   {"one_level", one ? to_json(*one) : Json(nullptr)}})};
    }
    std::string s = "a = " + std::to_string(p.a) + ", b = " + std::to_string(p.b) + "\n";
    s += "reduced basis (k = " + std::to_string(dimension(reduced)) + "):\n" + pretty_rows(reduced.entries());
    if (one) s += std::string("closed form ") + (*one == reduced ? "agrees" : "DIFFERS") + "\n";
    return {s};
}

inline Emitted cmd_maps(const CliConfig& c) {
    const auto fmt = format_or(c, Format::csv, {Format::csv, Format::json, Format::pretty});
    ProductParams p = bezout_pair(c.ell_a, c.m_a, c.m_b);
    if (c.a) {
        p.a = *c.a;
        const __int128 num = 1 - static_cast<__int128>(p.a) * p.row_length();
        if (num % p.m_b != 0) throw Error(ErrorKind::ParamMismatch, "a is not an inverse of ell_A m_A mod m_B");
        p.b = static_cast<std::int64_t>(num / p.m_b);
        p.validate();
    }
    const std::int64_t cols = c.table == 'f' ? p.row_length() : p.m_a;
    std::vector<std::vector<std::int64_t>> t(static_cast<std::size_t>(p.m_b));
    for (std::int64_t i = 0; i < p.m_b; ++i)
        for (std::int64_t j = 0; j < cols; ++j)
            t[static_cast<std::size_t>(i)].push_back(c.table == 'f' ? map_f(i, j, p) : map_g(i, j, p));
    if (fmt == Format::json)
        return {dump_document(Json{{"params", params_to_json(p)}, {"table", std::string(1, c.table)}, {"cells", t}})};
    std::string s;
    for (const auto& row : t) {
        for (std::size_t j = 0; j < row.size(); ++j) s += (j ? (fmt == Format::csv ? "," : " ") : "") + std::to_string(row[j]);
        s += "\n";
    }
    return {s};
}

inline Emitted cmd_mindist(const CliConfig& c) {
    const auto fmt = format_or(c, Format::pretty, {Format::pretty, Format::json});
    const auto b = rgb_pot_reduce(generating_matrix_from_json(read_document(c.inputs.at(0))));
    const auto t0 = std::chrono::steady_clock::now();
    const auto view = expand_to_linear(b);
    const auto r = min_distance(view, {c.guard, c.threads});
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    if (fmt == Format::json) {
        return {dump_document(Json{{"n", view.length()},
                                   {"k", view.dimension()},
                                   {"d", r.d},
                                   {"elapsed_ms", c.timing ? Json(ms) : Json(nullptr)},
                                   {"enumerated", r.enumerated}})};
    }
    std::ostringstream s;
    s << "[" << view.length() << ", " << view.dimension() << ", " << r.d << "] enumerated " << r.enumerated << " in "
      << ms << " ms\n";
    return {s.str()};
}

inline Emitted cmd_verify(const CliConfig& c) {
    const auto fmt = format_or(c, Format::pretty, {Format::pretty, Format::json});
    const auto g = generating_matrix_from_json(read_document(c.inputs.at(0)));
    const auto reduced = rgb_pot_reduce(g);
    Json rgb = Json{{"ok", false}, {"violations", Json::array()}};
    bool canonical = false;
    const bool square = g.rows().size() == g.ell();
    if (square) {
        const RgbPotBasis as_given(g.field(), g.m(), g.rows());
        rgb = report_to_json(is_rgb_pot(as_given));
        canonical = as_given == reduced;
    }
    const auto view = expand_to_linear(reduced);
    const bool qc = is_quasi_cyclic(view, reduced.ell());
    const std::size_t rank = view.echelon().rank();
    const std::size_t k = dimension(reduced);
    const bool ok = rgb["ok"].get<bool>() && canonical && qc && rank == k;
    const int code = ok ? kOk : kMismatch;
    if (fmt == Format::json) {
        return {dump_document(Json{{"ok", ok},
                                   {"square", square},
                                   {"rgb_pot", rgb},
                                   {"canonical", canonical},
                                   {"quasi_cyclic", qc},
                                   {"dimension", k},
                                   {"rank", rank}}),
                code};
    }
    std::ostringstream s;
    s << "rgb/pot conditions: " << (!square ? "not a square basis" : rgb["ok"].get<bool>() ? "ok" : "violated") << "\n"
      << "canonical: " << (canonical ? "yes" : "no") << "\n"
      << "quasi-cyclic (ell = " << reduced.ell() << "): " << (qc ? "yes" : "no") << "\n"
      << "k = " << k << ", rank = " << rank << "\n"
      << (ok ? "OK" : "FAILED") << "\n";
    return {s.str(), code};
}

namespace golden {

inline constexpr const char* kM17_1 = "X^8+X^7+X^6+X^4+X^2+X+1";
inline constexpr const char* kGa01 = "X^14+X^13+X^12+X^11+X^8+1";
inline constexpr const char* kF1Substituted = "X^18+X^6+X^3+1";
inline constexpr const char* kG00 =
    "X^33+X^32+X^30+X^27+X^25+X^23+X^20+X^18+X^17+X^16+X^15+X^13+X^10+X^8+X^6+X^3+X+1";
inline constexpr const char* kG01 = "X^50+X^48+X^45+X^43+X^41+X^39+X^36+X^34+X^32+X^29+X^27+X^26+X^25+X^23+X^22+"
                                    "X^21+X^19+X^18+X^17+X^16+X^15+X^14+X^12+X^11+X^10+X^8+X^7+X^6+X^4+X";

} // namespace golden

inline Emitted cmd_worked_example(const CliConfig& c) {
    const auto fmt = format_or(c, Format::pretty, {Format::pretty, Format::json});
    const Field f(2, 1);
    Json checks = Json::array();
    bool all = true;
    auto check = [&](const std::string& name, const Json& expected, const Json& actual) {
        const bool ok = expected == actual;
        all = all && ok;
        checks.push_back(Json{{"name", name}, {"ok", ok}, {"expected", expected}, {"actual", actual}});
    };
    auto reps = [](const std::vector<CyclotomicFactor>& fs) {
        std::vector<std::uint64_t> r;
        for (const auto& x : fs) r.push_back(x.representative);
        return r;
    };

    const auto f17 = factor_xm_minus_1(2, 17);
    check("factors of X^17-1", std::vector<std::uint64_t>{0, 1, 3}, reps(f17));
    check("m_1 for m = 17", golden::kM17_1, to_string(minimal_polynomial(2, 17, 1)));
    check("factors of X^51-1", std::vector<std::uint64_t>{0, 1, 3, 5, 9, 11, 17, 19}, reps(factor_xm_minus_1(2, 51)));

    const Poly m1 = minimal_polynomial(2, 17, 1);
    const Poly m0 = minimal_polynomial(2, 17, 0);
    const Poly f1 = m0 * m0 * m0 * parse_poly(f, "X^3+X^2+1");
    const auto A = rgb_pot_reduce(GeneratingMatrix(f, 2, 17, {{m1, (m1 * f1).mod_xn_minus_one(17)}}));
    check("A g[0][0]", golden::kM17_1, to_string(A.entry(0, 0)));
    check("A g[0][1]", golden::kGa01, to_string(A.entry(0, 1)));
    check("A dimension", 9, dimension(A));

    const CyclicCode B(3, parse_poly(f, "X+1"));
    const auto p = bezout_pair(2, 17, 3);
    check("Bezout pair", Json::array({1, -11}), Json::array({p.a, p.b}));
    check("f_1 substituted", golden::kF1Substituted, to_string(modular_substitute(f1, p.b * p.m_b, 51)));

    const auto shifted = one_level_product_rgb(one_level_from_basis(A), B, p, Frame::shifted);
    check("g[0][0]", golden::kG00, to_string(shifted.entry(0)));
    check("g[0][1]", golden::kG01, to_string(shifted.entry(1)));

    const auto codeword = one_level_product_rgb(one_level_from_basis(A), B, p, Frame::codeword);
    check("g[0][0] in codeword frame", golden::kG00, to_string(codeword.entry(0)));
    check("closed form agrees with reduction (codeword frame)", true, codeword.basis() == product_rgb(A, B, p));
    check("closed form agrees with reduction (shifted frame)", true,
          shifted.basis() == product_rgb(A, B, p, Frame::shifted));
    check("product dimension", 18, dimension(codeword.basis()));

    const EnumerationOptions opt{c.guard, c.threads};
    check("d(A)", 11, min_distance(expand_to_linear(A), opt).d);
    check("d(B)", 2, min_distance(expand_to_linear(cyclic_basis(B)), opt).d);
    check("d(A x B)", 22, min_distance(expand_to_linear(codeword.basis()), opt).d);

    const int code = all ? kOk : kMismatch;
    if (fmt == Format::json) {
        return {dump_document(Json{{"ok", all},
                                   {"checks", checks},
                                   {"g00", to_string(shifted.entry(0))},
                                   {"g01", to_string(shifted.entry(1))},
                                   {"g01_codeword", to_string(codeword.entry(1))}}),
                code};
    }
    std::string s;
    for (const auto& ch : checks) s += std::string(ch["ok"].get<bool>() ? "ok       " : "MISMATCH ") + ch["name"].get<std::string>() + "\n";
    s += "g00 = " + to_string(shifted.entry(0)) + "\n";
    s += "g01 = " + to_string(shifted.entry(1)) + "\n";
    s += all ? "all golden values reproduced\n" : "golden mismatch\n";
    return {s, code};
}

inline Emitted dispatch(const CliConfig& c) {
    static const std::vector<std::pair<std::string, std::function<Emitted(const CliConfig&)>>> table = {
        {"cosets", cmd_cosets}, {"factor", cmd_factor},   {"minpoly", cmd_minpoly}, {"reduce", cmd_reduce},
        {"product", cmd_product}, {"maps", cmd_maps},     {"mindist", cmd_mindist}, {"verify", cmd_verify},
        {"example-sec4", cmd_worked_example}};
    for (const auto& [name, fn] : table)
        if (name == c.subcommand) return fn(c);
    throw UsageError("unknown subcommand '" + c.subcommand + "'");
}

inline void emit_error(std::ostream& err, const std::string& kind, const std::string& message, int code) {
    err << Json{{"error", Json{{"kind", kind}, {"message", message}, {"exit_code", code}}}}.dump() << "\n";
}

} // namespace detail

/// Runs one command; args excludes the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CliConfig c;
    CLI::App app{"Quasi-cyclic product code toolkit", "qcpc"};
    app.require_subcommand(1, 1);
    app.fallthrough();

    std::string format;
    std::string frame = "codeword";
    app.add_option("-f,--format", format, "Output format")->check(CLI::IsMember({"pretty", "json", "csv"}));
    app.add_option("-o,--output", c.output, "Write the document to this file");
    app.add_option("--modulus", c.modulus, "Base-field modulus when q is a prime power");
    app.add_option("--guard", c.guard, "Enumeration guard (messages)");
    app.add_option("--threads", c.threads, "Enumeration threads")->check(CLI::Range(1u, 1024u));
    app.add_flag("--timing", c.timing, "Report elapsed_ms in JSON");
    app.add_option("--frame", frame, "Product frame")->check(CLI::IsMember({"codeword", "shifted"}));

    auto* cosets = app.add_subcommand("cosets", "q-cyclotomic cosets modulo m");
    cosets->add_option("q", c.q)->required();
    cosets->add_option("m", c.m)->required();
    auto* factor = app.add_subcommand("factor", "Factor X^m - 1 over GF(q)");
    factor->add_option("q", c.q)->required();
    factor->add_option("m", c.m)->required();
    auto* minpoly = app.add_subcommand("minpoly", "Minimal polynomial of alpha^i");
    minpoly->add_option("q", c.q)->required();
    minpoly->add_option("m", c.m)->required();
    minpoly->add_option("i", c.i)->required();
    auto* reduce = app.add_subcommand("reduce", "RGB/POT form of a generating matrix");
    reduce->add_option("basis", c.inputs)->required()->expected(1);
    auto* product = app.add_subcommand("product", "Product of a quasi-cyclic and a cyclic code");
    product->add_option("files", c.inputs)->required()->expected(2);
    auto* maps = app.add_subcommand("maps", "Index map table");
    maps->add_option("ell_a", c.ell_a)->required();
    maps->add_option("m_a", c.m_a)->required();
    maps->add_option("m_b", c.m_b)->required();
    maps->add_option("--a", c.a, "Alternative Bezout coefficient a");
    maps->add_option("--table", c.table, "f or g")->check(CLI::IsMember({'f', 'g'}));
    auto* mindist = app.add_subcommand("mindist", "Exact minimum distance");
    mindist->add_option("basis", c.inputs)->required()->expected(1);
    auto* verify = app.add_subcommand("verify", "Check RGB/POT conditions and quasi-cyclicity");
    verify->add_option("basis", c.inputs)->required()->expected(1);
    app.add_subcommand("example-sec4", "Reproduce the worked binary example");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        detail::emit_error(err, "Usage", e.what(), kUsage);
        return kUsage;
    }
    c.subcommand = app.get_subcommands().front()->get_name();
    if (!format.empty()) c.format = format == "json" ? Format::json : format == "csv" ? Format::csv : Format::pretty;
    c.frame = frame == "shifted" ? Frame::shifted : Frame::codeword;

    detail::Emitted result;
    try {
        result = detail::dispatch(c);
    } catch (const UsageError& e) {
        detail::emit_error(err, "Usage", e.what(), kUsage);
        return kUsage;
    } catch (const Error& e) {
        const int code = detail::exit_code_for(e.kind());
        detail::emit_error(err, std::string(to_string(e.kind())), e.what(), code);
        return code;
    }
    if (c.output.empty()) {
        out << result.text;
    } else {
        std::ofstream f(c.output, std::ios::binary);
        if (!f || !(f << result.text)) {
            detail::emit_error(err, "Io", "cannot write '" + c.output + "'", kPrecondition);
            return kPrecondition;
        }
    }
    return result.code;
}

} // namespace qcpc::cli
