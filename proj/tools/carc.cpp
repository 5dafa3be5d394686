#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "carc/cliques.hpp"
#include "carc/generators.hpp"
#include "carc/io.hpp"
#include "carc/nhca.hpp"
#include "carc/oracle.hpp"
#include "carc/orientations.hpp"
#include "carc/phca.hpp"
#include "carc/uhca.hpp"

using namespace carc;

namespace {

std::ostream* open_output(const std::string& path, std::ofstream& file) {
    if (path.empty()) return &std::cout;
    file.open(path);
    if (!file) throw std::runtime_error("cannot open " + path);
    return &file;
}

std::string join_ids(const std::vector<int>& ids) {
    std::string s;
    for (size_t i = 0; i < ids.size(); i++) {
        if (i) s += ',';
        s += std::to_string(ids[i]);
    }
    return s;
}

std::string rat_str(const Rational& r) {
    std::ostringstream ss;
    ss << boost::multiprecision::numerator(r);
    if (boost::multiprecision::denominator(r) != 1)
        ss << "/" << boost::multiprecision::denominator(r);
    return ss.str();
}

Rational parse_rat(const std::string& s) {
    auto slash = s.find('/');
    using boost::multiprecision::cpp_int;
    if (slash == std::string::npos) return Rational(cpp_int(s));
    return Rational(cpp_int(s.substr(0, slash)), cpp_int(s.substr(slash + 1)));
}

UnitWitness load_witness(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open " + path);
    nlohmann::json j;
    f >> j;
    UnitWitness w;
    w.circumference = parse_rat(j.at("L").get<std::string>());
    w.arc_length = parse_rat(j.at("u").get<std::string>());
    for (const auto& p : j.at("positions")) w.positions.push_back(parse_rat(p.get<std::string>()));
    return w;
}

void write_witness(std::ostream& out, const UnitWitness& w) {
    nlohmann::json j;
    j["L"] = rat_str(w.circumference);
    j["u"] = rat_str(w.arc_length);
    j["positions"] = nlohmann::json::array();
    for (const auto& p : w.positions) j["positions"].push_back(rat_str(p));
    out << j.dump() << "\n";
}

void print_obstruction(const Obstruction& ob) {
    std::cout << "certificate=" << forbidden_kind_name(ob.kind) << " arcs=" << join_ids(ob.vertices)
              << "\n";
}

int run_check(const std::string& file) {
    CircularArcModel m = load_model(file);
    ClassReport r = classify(m);
    std::cout << "n=" << m.arc_count() << "\n";
    std::cout << "proper=" << (r.proper ? "true" : "false") << "\n";
    std::cout << "normal=" << (r.normal ? "true" : "false") << "\n";
    std::cout << "helly=" << (r.helly ? "true" : "false") << "\n";
    std::cout << "interval=" << (r.interval_point ? "true" : "false") << "\n";
    if (r.two_cover)
        std::cout << "two_cover=" << r.two_cover->first << "," << r.two_cover->second << "\n";
    else
        std::cout << "two_cover=none\n";
    if (r.three_cover)
        std::cout << "three_cover=" << join_ids({(*r.three_cover)[0], (*r.three_cover)[1], (*r.three_cover)[2]})
                  << "\n";
    else
        std::cout << "three_cover=none\n";
    return 0;
}

void maybe_emit(const std::optional<CircularArcModel>& model, const std::string& path) {
    if (path.empty() || !model) return;
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot open " + path);
    write_model(f, *model);
}

int recognize_one(const std::string& file, const std::string& cls, std::string from,
                  const std::string& emit, const std::string& witness_path, bool trace) {
    CircularArcModel m = load_model(file);
    if (trace) std::cerr << "trace: input " << m.arc_count() << " arcs: " << m.to_string() << "\n";
    std::cout << "class=" << cls << "\n";
    if (cls == "nhca") {
        Certificate cert = recognize_nhca(m);
        if (cert.positive()) {
            std::cout << "verdict=positive\n";
            maybe_emit(cert.model, emit);
            return 0;
        }
        std::cout << "verdict=negative\n";
        if (!cert.cover.empty()) std::cout << "cover=" << join_ids(cert.cover) << "\n";
        if (cert.obstruction) print_obstruction(*cert.obstruction);
        return 1;
    }
    if (cls == "phca") {
        if (from.empty()) {
            if (is_proper_model(m)) from = "pca";
            else if (authenticate_nhca(m).kind == CoverCheck::Kind::Ok) from = "nhca";
            else throw std::runtime_error("model is neither proper nor NHCA; no PHCA route applies");
        }
        if (trace) std::cerr << "trace: route " << from << "\n";
        Certificate cert = from == "pca" ? phca_from_pca(m) : phca_from_nhca(m);
        std::cout << "from=" << from << "\n";
        if (cert.positive()) {
            std::cout << "verdict=positive\n";
            if (trace) std::cerr << "trace: output " << cert.model->to_string() << "\n";
            maybe_emit(cert.model, emit);
            return 0;
        }
        std::cout << "verdict=negative\n";
        if (cert.obstruction) print_obstruction(*cert.obstruction);
        return 1;
    }
    if (cls == "uhca") {
        UhcaResult res = witness_path.empty() ? uhca_from_phca(m)
                                              : uhca_from_uca(m, load_witness(witness_path));
        if (res.positive) {
            std::cout << "verdict=positive\n";
            if (res.witness) write_witness(std::cout, *res.witness);
            maybe_emit(res.model, emit);
            return 0;
        }
        std::cout << "verdict=negative\n";
        if (res.ci) {
            std::cout << "certificate=CI n=" << res.ci->n << " k=" << res.ci->k
                      << " arcs=" << join_ids(res.ci->mapping) << "\n";
        }
        if (res.obstruction) print_obstruction(*res.obstruction);
        if (!res.note.empty()) std::cout << "note=" << res.note << "\n";
        return 1;
    }
    throw CLI::ValidationError("--class must be nhca, phca or uhca");
}

void print_matrix(const CliqueMatrix& q) {
    for (size_t i = 0; i < q.m.size(); i++) {
        std::cout << "row" << i << "=";
        for (int j = 0; j < q.cols; j++) std::cout << (q.m[i][j] ? '1' : '0');
        std::cout << " clique=" << join_ids(q.cliques[i]) << "\n";
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"circular-arc model toolkit"};
    app.require_subcommand(1);

    // generate
    auto* gen = app.add_subcommand("generate", "emit a named model or graph");
    std::string family;
    std::vector<int> params;
    std::string gen_as = "model", gen_out;
    uint64_t seed = 1;
    bool gen_proper = false;
    gen->add_option("family", family,
                    "ci|wheel|risingsun|sun3|umbrella|tent|hole|k13|path|complete|random")
        ->required();
    gen->add_option("params", params, "family parameters");
    gen->add_option("--as", gen_as, "model|graph")->check(CLI::IsMember({"model", "graph"}));
    gen->add_option("-o,--output", gen_out, "output file (default stdout)");
    auto* seed_opt = gen->add_option("--seed", seed, "random seed");
    gen->add_flag("--proper", gen_proper, "constrain random models to proper");

    // check
    auto* chk = app.add_subcommand("check", "brute-force class report for a model");
    std::string chk_file;
    chk->add_option("file", chk_file, "input .cam")->required();

    // recognize
    auto* rec = app.add_subcommand("recognize", "recognition with certificates");
    std::string rec_class, rec_file, rec_from, rec_emit, rec_witness, rec_batch;
    bool rec_trace = false;
    rec->add_option("--class", rec_class, "nhca|phca|uhca")->required();
    rec->add_option("file", rec_file, "input .cam");
    rec->add_option("--from", rec_from, "nhca|pca (phca route)");
    rec->add_option("--emit-model", rec_emit, "write the positive model here");
    rec->add_option("--unit-witness", rec_witness, "unit witness JSON (uhca route)");
    rec->add_option("--batch", rec_batch, "process every .cam in a directory");
    rec->add_flag("--trace", rec_trace, "dump pipeline stages to stderr");

    // cliques
    auto* clq = app.add_subcommand("cliques", "clique matrix and ones properties");
    std::string clq_file, clq_test;
    bool clq_matrix = false;
    clq->add_option("file", clq_file, "input .cam or .g")->required();
    clq->add_flag("--matrix", clq_matrix, "print the clique matrix");
    clq->add_option("--test", clq_test, "rows|columns|both (circular mode)");

    // orient
    auto* ori = app.add_subcommand("orient", "round orientations from a model");
    std::string ori_file, ori_flavor = "out-round";
    ori->add_option("file", ori_file, "input .cam")->required();
    ori->add_option("--flavor", ori_flavor, "out-round|round")
        ->check(CLI::IsMember({"out-round", "round"}));

    // enumerate
    auto* enu = app.add_subcommand("enumerate", "all models of a small graph");
    std::string enu_file, enu_filter = "any";
    enu->add_option("file", enu_file, "input .g")->required();
    enu->add_option("--filter", enu_filter, "any|nhca|nphca");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (gen->parsed()) {
            FamilySpec spec{};
            bool random = false;
            if (family == "ci") spec = {Family::CI, params.size() > 0 ? params[0] : 0,
                                        params.size() > 1 ? params[1] : 0};
            else if (family == "wheel") spec = {Family::Wheel, params.empty() ? 0 : params[0]};
            else if (family == "risingsun") spec = {Family::RisingSun, params.empty() ? 0 : params[0]};
            else if (family == "sun3") spec = {Family::Sun3};
            else if (family == "umbrella") spec = {Family::Umbrella};
            else if (family == "tent") spec = {Family::Tent};
            else if (family == "hole") spec = {Family::Hole, params.empty() ? 0 : params[0]};
            else if (family == "k13") spec = {Family::K13};
            else if (family == "path") spec = {Family::Path, params.empty() ? 0 : params[0]};
            else if (family == "complete") spec = {Family::CompleteGraph, params.empty() ? 0 : params[0]};
            else if (family == "random") random = true;
            else throw CLI::ValidationError("unknown family " + family);

            std::ofstream file;
            std::ostream* out = open_output(gen_out, file);
            if (random) {
                if (params.empty()) throw CLI::ValidationError("random needs n");
                if (seed_opt->count() == 0)
                    if (const char* env = std::getenv("CARC_SEED")) seed = std::strtoull(env, nullptr, 10);
                CircularArcModel m = random_model(
                    params[0], seed, gen_proper ? RandomConstraint::Proper : RandomConstraint::Any);
                if (gen_as == "model") write_model(*out, m);
                else write_graph(*out, intersection_graph(m));
            } else if (gen_as == "model") {
                write_model(*out, named_model(spec));
            } else {
                write_graph(*out, named_graph(spec));
            }
            return 0;
        }
        if (chk->parsed()) return run_check(chk_file);
        if (rec->parsed()) {
            if (!rec_batch.empty()) {
                int worst = 0;
                std::vector<std::filesystem::path> files;
                for (const auto& entry : std::filesystem::directory_iterator(rec_batch))
                    if (entry.path().extension() == ".cam") files.push_back(entry.path());
                std::sort(files.begin(), files.end());
                for (const auto& p : files) {
                    std::cout << "file=" << p.string() << "\n";
                    try {
                        int rc = recognize_one(p.string(), rec_class, rec_from, "", rec_witness, rec_trace);
                        worst = std::max(worst, rc);
                    } catch (const std::exception& e) {
                        std::cout << "error=" << e.what() << "\n";
                        worst = 2;
                    }
                }
                return worst;
            }
            if (rec_file.empty()) throw CLI::ValidationError("recognize needs a file or --batch");
            return recognize_one(rec_file, rec_class, rec_from, rec_emit, rec_witness, rec_trace);
        }
        if (clq->parsed()) {
            Graph g;
            if (clq_file.size() > 4 && clq_file.substr(clq_file.size() - 4) == ".cam")
                g = intersection_graph(load_model(clq_file));
            else
                g = load_graph(clq_file);
            CliqueMatrix q = clique_matrix(g);
            std::cout << "cliques=" << q.m.size() << " vertices=" << q.cols << "\n";
            if (clq_matrix) print_matrix(q);
            auto report = [&](OnesAxis axis, const char* name) {
                auto w = ones_property(q.m, axis, OnesMode::Circular);
                std::cout << name << "_circular=" << (w ? "yes" : "no");
                if (w) std::cout << " order=" << join_ids(*w);
                std::cout << "\n";
            };
            if (clq_test == "rows" || clq_test == "both") report(OnesAxis::Rows, "rows");
            if (clq_test == "columns" || clq_test == "both") report(OnesAxis::Columns, "columns");
            if (clq_test == "both")
                std::cout << "phca_via_matrix=" << (phca_via_matrix(g) ? "true" : "false") << "\n";
            return 0;
        }
        if (ori->parsed()) {
            CircularArcModel m = load_model(ori_file);
            OrientFlavor flavor = ori_flavor == "round" ? OrientFlavor::Round : OrientFlavor::OutRound;
            auto [d, e] = orient_from_model(m, flavor);
            std::cout << "enumeration=" << join_ids(e.order) << "\n";
            EnumKind base = flavor == OrientFlavor::Round ? EnumKind::Round : EnumKind::OutRound;
            std::cout << "flavor=" << ori_flavor << " verified="
                      << (verify_enumeration(d, e, base) ? "true" : "false") << "\n";
            std::cout << "locally_out_straight="
                      << (verify_enumeration(d, e, EnumKind::LocallyOutStraight) ? "true" : "false")
                      << "\n";
            std::cout << "locally_straight="
                      << (verify_enumeration(d, e, EnumKind::LocallyStraight) ? "true" : "false")
                      << "\n";
            return 0;
        }
        if (enu->parsed()) {
            Graph g = load_graph(enu_file);
            std::function<bool(const CircularArcModel&)> filter;
            if (enu_filter == "any") filter = nullptr;
            else if (enu_filter == "nhca")
                filter = [](const CircularArcModel& m) {
                    return authenticate_nhca(m).kind == CoverCheck::Kind::Ok;
                };
            else if (enu_filter == "nphca")
                filter = [](const CircularArcModel& m) {
                    return authenticate_nhca(m).kind == CoverCheck::Kind::Ok && is_proper_model(m);
                };
            else throw CLI::ValidationError("--filter must be any, nhca or nphca");
            auto models = enumerate_models(g, filter);
            std::cout << "count=" << models.size() << "\n";
            for (const auto& m : models) std::cout << "model=" << m.to_string() << "\n";
            return 0;
        }
    } catch (const CLI::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
