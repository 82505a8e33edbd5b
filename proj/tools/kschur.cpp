/* command line front end: every verb prints one canonical JSON document
 * on stdout (or a unicode rendering with --format pretty) and uses the
 * exit code contract 0 = success, 1 = verification failure, 2 = usage
 * or precondition error
 */

#include <exception>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "kschur/json_io.hpp"
#include "kschur/kspace.hpp"
#include "kschur/partition.hpp"
#include "kschur/schur.hpp"
#include "kschur/symfunc.hpp"
#include "kschur/verify.hpp"
#include "kschur/vertex.hpp"

namespace {

using namespace kschur;

IntVector parse_vec(const std::string& s) {
    IntVector out;
    if (s.empty()) return out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        size_t used = 0;
        int v = std::stoi(tok, &used);
        if (used != tok.size())
            throw std::invalid_argument("bad integer list entry: " + tok);
        out.push_back(v);
    }
    return out;
}

Partition parse_shape(const std::string& s) { return Partition(parse_vec(s)); }

void emit(const Json& j) { std::cout << j.dump() << "\n"; }

void emit_symfunc(const SymFunc& f, const std::string& format, bool t_one) {
    SymFunc g = t_one ? f.at_t_one() : f;
    if (format == "pretty")
        std::cout << pretty_symfunc(g) << "\n";
    else
        emit(json_of(g));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Hall-Littlewood vertex operator toolkit"};
    app.require_subcommand(1);

    std::string format = "json";
    bool t_one = false;
    bool timings = false;
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"json", "pretty"}));
    app.add_flag("--t-one", t_one, "specialize t = 1 in function output");
    app.add_flag("--timings", timings, "include millis in verify reports");

    std::string shape_s, index_s, vector_s, to_hl_s, suite, kind = "g";
    int k = 0, degree = 0, max_degree = 0;
    bool inverse = false, foulkes = false;

    CLI::App* hl = app.add_subcommand("hl", "Schur expansion of a Hall-Littlewood polynomial");
    hl->add_option("--shape", shape_s, "partition, comma separated")->required();

    CLI::App* ks = app.add_subcommand("kschur", "Schur expansion of a k-Schur function");
    ks->add_option("--k", k)->required();
    ks->add_option("--shape", shape_s)->required();

    CLI::App* gp = app.add_subcommand("gpoly", "Schur expansion of a k-split polynomial");
    gp->add_option("--k", k)->required();
    gp->add_option("--shape", shape_s)->required();

    CLI::App* sp = app.add_subcommand("ksplit", "split a shape into main-hook-k blocks");
    sp->add_option("--k", k)->required();
    sp->add_option("--shape", shape_s)->required();

    CLI::App* st = app.add_subcommand("straighten", "normalize a Schur index vector");
    st->add_option("--vector", vector_s)->required();

    CLI::App* ko = app.add_subcommand("kostka", "Kostka matrix of one degree");
    ko->add_option("--degree", degree)->required();
    CLI::Option* inv_opt = ko->add_flag("--inverse", inverse, "inverse matrix");
    ko->add_flag("--foulkes", foulkes, "t-analog entries")->excludes(inv_opt);

    CLI::App* ab = app.add_subcommand("apply-b", "apply a vertex operator string");
    ab->add_option("--index", index_s, "operator index vector")->required();
    ab->add_option("--to-hl", to_hl_s, "apply to this Hall-Littlewood polynomial, default 1");

    CLI::App* ir = app.add_subcommand("irreducibles", "all k-irreducible shapes");
    ir->add_option("--k", k)->required();

    CLI::App* rd = app.add_subcommand("reduce", "peel k-rectangles down to an irreducible");
    rd->add_option("--k", k)->required();
    rd->add_option("--shape", shape_s)->required();

    CLI::App* ve = app.add_subcommand("verify", "run an identity suite");
    ve->add_option("--suite", suite)->required();
    ve->add_option("--max-degree", max_degree)->required();

    CLI::App* tb = app.add_subcommand("table", "transition table of one degree");
    tb->add_option("--k", k)->required();
    tb->add_option("--degree", degree)->required();
    tb->add_option("--kind", kind)->check(CLI::IsMember({"g", "kschur"}));

    for (CLI::App* sub : app.get_subcommands({})) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (hl->parsed()) {
            emit_symfunc(hall_littlewood(parse_shape(shape_s)), format, t_one);
        } else if (ks->parsed()) {
            emit_symfunc(k_schur(parse_shape(shape_s), k), format, t_one);
        } else if (gp->parsed()) {
            emit_symfunc(g_poly(parse_shape(shape_s), k), format, t_one);
        } else if (sp->parsed()) {
            KSplit split = k_split(parse_shape(shape_s), k);
            if (format == "pretty") {
                std::string line;
                for (const Partition& b : split.blocks) {
                    if (!line.empty()) line += " ";
                    line += b.str();
                }
                std::cout << (line.empty() ? "[]" : line) << "\n";
            } else {
                emit(json_of(split));
            }
        } else if (st->parsed()) {
            Straightened res = straighten(parse_vec(vector_s));
            if (format == "pretty") {
                if (res.sign == 0) {
                    std::cout << "0\n";
                } else {
                    std::string lbl = "[";
                    for (size_t i = 0; i < res.parts.size(); ++i) {
                        if (i) lbl += ",";
                        lbl += std::to_string(res.parts[i]);
                    }
                    lbl += "]";
                    std::cout << (res.sign < 0 ? "-s" : "s") << lbl << "\n";
                }
            } else {
                emit(json_of(res));
            }
        } else if (ko->parsed()) {
            const KostkaTable& T = kostka_table(degree);
            Json out;
            out["degree"] = degree;
            out["kind"] = foulkes ? "foulkes" : inverse ? "inverse" : "kostka";
            Json order = Json::array();
            for (const Partition& p : T.order) order.push_back(json_of(p));
            out["order"] = std::move(order);
            Json matrix = Json::array();
            const size_t n = T.order.size();
            for (size_t i = 0; i < n; ++i) {
                Json row = Json::array();
                for (size_t j = 0; j < n; ++j) {
                    if (foulkes) {
                        TPoly c = hall_littlewood(T.order[j]).coeff(T.order[i]);
                        if (t_one) c = TPoly(c.eval_at_one());
                        row.push_back(json_of(c));
                    } else {
                        const Int& v = inverse ? T.inverse[i][j] : T.kostka[i][j];
                        row.push_back(v.get_str());
                    }
                }
                matrix.push_back(std::move(row));
            }
            out["matrix"] = std::move(matrix);
            if (format == "pretty") {
                for (size_t i = 0; i < n; ++i) {
                    std::string line;
                    for (size_t j = 0; j < n; ++j) {
                        if (!line.empty()) line += "  ";
                        if (foulkes) {
                            TPoly c = hall_littlewood(T.order[j]).coeff(T.order[i]);
                            if (t_one) c = TPoly(c.eval_at_one());
                            line += pretty_poly(c);
                        } else {
                            line += (inverse ? T.inverse[i][j] : T.kostka[i][j]).get_str();
                        }
                    }
                    std::cout << T.order[i].str() << ": " << line << "\n";
                }
            } else {
                emit(out);
            }
        } else if (ab->parsed()) {
            SymFunc base = hall_littlewood(parse_shape(to_hl_s));
            emit_symfunc(apply_B_vector(parse_vec(index_s), base), format, t_one);
        } else if (ir->parsed()) {
            const auto shapes = k_irreducibles(k);
            if (format == "pretty") {
                for (const Partition& p : shapes) std::cout << p.str() << "\n";
            } else {
                Json out;
                out["k"] = k;
                out["count"] = shapes.size();
                Json arr = Json::array();
                for (const Partition& p : shapes) arr.push_back(json_of(p));
                out["partitions"] = std::move(arr);
                emit(out);
            }
        } else if (rd->parsed()) {
            Reduction red = reduce_to_irreducible(parse_shape(shape_s), k);
            if (format == "pretty") {
                std::string line = "t^" + std::to_string(red.c);
                for (const Partition& r : red.rectangles) line += " B" + r.str();
                line += " on " + red.irreducible.str();
                std::cout << line << "\n";
            } else {
                emit(json_of(red));
            }
        } else if (ve->parsed()) {
            std::vector<VerifyReport> reports = sweep(suite, max_degree);
            bool all = true;
            for (const VerifyReport& r : reports) all = all && r.pass;
            if (format == "pretty") {
                int passed = 0;
                for (const VerifyReport& r : reports) {
                    if (r.pass) ++passed;
                    std::cout << (r.pass ? "PASS " : "FAIL ") << r.id << " "
                              << r.params;
                    if (!r.pass && !r.witness.empty())
                        std::cout << ": " << r.witness;
                    if (timings) std::cout << " [" << r.millis << " ms]";
                    std::cout << "\n";
                }
                std::cout << "passed " << passed << "/" << reports.size() << "\n";
            } else {
                Json out;
                out["suite"] = suite;
                out["max_degree"] = max_degree;
                out["pass"] = all;
                Json arr = Json::array();
                for (const VerifyReport& r : reports)
                    arr.push_back(json_of(r, timings));
                out["reports"] = std::move(arr);
                emit(out);
            }
            if (!all) return 1;
        } else if (tb->parsed()) {
            if (kind == "g") {
                const GTable& T = g_table(k, degree);
                Json out;
                out["k"] = k;
                out["degree"] = degree;
                out["kind"] = "g";
                Json order = Json::array();
                for (const Partition& p : T.order) order.push_back(json_of(p));
                out["order"] = std::move(order);
                out["triangular"] = T.triangular;
                out["unit_diagonal"] = T.unit_diagonal;
                Json matrix = Json::array();
                for (const auto& rowv : T.h_to_g) {
                    Json row = Json::array();
                    for (const TPoly& c : rowv)
                        row.push_back(json_of(t_one ? TPoly(c.eval_at_one()) : c));
                    matrix.push_back(std::move(row));
                }
                out["matrix"] = std::move(matrix);
                if (format == "pretty") {
                    for (size_t i = 0; i < T.order.size(); ++i) {
                        std::string line;
                        for (const TPoly& c : T.h_to_g[i]) {
                            if (!line.empty()) line += "  ";
                            line += pretty_poly(t_one ? TPoly(c.eval_at_one()) : c);
                        }
                        std::cout << T.order[i].str() << ": " << line << "\n";
                    }
                } else {
                    emit(out);
                }
            } else {
                Json out;
                out["k"] = k;
                out["degree"] = degree;
                out["kind"] = "kschur";
                Json entries = Json::array();
                for (const Partition& lam : partitions_in(degree, degree, k)) {
                    const SymFunc& f = k_schur(lam, k);
                    if (format == "pretty") {
                        std::cout << lam.str() << ": "
                                  << pretty_symfunc(t_one ? f.at_t_one() : f) << "\n";
                    } else {
                        Json e;
                        e["shape"] = json_of(lam);
                        e["function"] = json_of(t_one ? f.at_t_one() : f);
                        entries.push_back(std::move(e));
                    }
                }
                if (format != "pretty") {
                    out["entries"] = std::move(entries);
                    emit(out);
                }
            }
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
