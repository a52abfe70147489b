// truncat: build and verify objects of grade-truncated current-algebra
// categories from the command line.
#include <iostream>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "CLI11.hpp"
#include "json.hpp"

#include "truncat/selftest.hpp"
#include "truncat/tilting.hpp"

using namespace truncat;
using nlohmann::ordered_json;

namespace {

struct Usage : std::runtime_error {
    using std::runtime_error::runtime_error;
};

const RootSystem& algebraOf(const std::string& name) {
    auto t = parseAlgebraType(name);
    if (!t) throw DomainError("unsupported algebra type: " + name);
    return RootSystem::get(*t);
}

std::vector<int> parseInts(const std::string& s) {
    std::vector<int> out;
    std::string cur;
    for (char c : s) {
        if (c == ',') {
            out.push_back(std::stoi(cur));
            cur.clear();
        } else
            cur += c;
    }
    if (!cur.empty()) out.push_back(std::stoi(cur));
    return out;
}

Weight parseWeight(const RootSystem& rs, const std::string& s) {
    auto v = parseInts(s);
    if (static_cast<int>(v.size()) != rs.rank)
        throw Usage("weight needs " + std::to_string(rs.rank) + " coordinates: " + s);
    return Weight(v);
}

LamPoint parsePoint(const RootSystem& rs, const std::string& s) {
    auto v = parseInts(s);
    if (static_cast<int>(v.size()) != rs.rank + 1)
        throw Usage("point needs " + std::to_string(rs.rank) +
                    " weight coordinates plus a grade: " + s);
    int grade = v.back();
    v.pop_back();
    return LamPoint{Weight(v), grade};
}

ordered_json weightJson(const Weight& w) { return ordered_json(w.c); }

ordered_json pointJson(const LamPoint& p) {
    return ordered_json{{"weight", p.weight.c}, {"grade", p.grade}};
}

ordered_json charJson(const GradedCharacter& x) {
    return ordered_json::parse(charToJson(x));
}

ordered_json certJson(const TiltingCertificate& cert) {
    ordered_json j;
    j["anchor"] = pointJson(cert.anchor);
    j["standard_multiplicities"] = ordered_json::array();
    for (const auto& [l, m] : cert.deltaMults)
        j["standard_multiplicities"].push_back(
            {{"weight", l.weight.c}, {"grade", l.grade}, {"mult", m}});
    j["highest_line"] = ordered_json::array();
    for (const auto& [s, d] : cert.highestLine)
        j["highest_line"].push_back({{"grade", s}, {"dim", d}});
    j["ext_sweep"] = ordered_json::array();
    for (const auto& e : cert.extLog)
        j["ext_sweep"].push_back(
            {{"weight", e.point.weight.c}, {"grade", e.point.grade}, {"dim", e.dim}});
    j["end_dim"] = cert.endDim;
    j["rad_dim"] = cert.radDim;
    j["indecomposable"] = cert.indecomposable;
    j["costandard_filtration"] = cert.nablaFiltration;
    return j;
}

void emit(const ordered_json& doc, bool jsonMode, const std::string& text) {
    if (jsonMode)
        std::cout << doc.dump(2) << "\n";
    else
        std::cout << text;
}

int runSelftest(bool jsonMode) {
    ordered_json results = ordered_json::array();
    bool all = true;
    auto rs = runAcceptanceSuite([&](const CriterionResult& r) {
        if (!jsonMode) {
            std::printf("criterion %2d [%s] %-52s (%.2fs) %s\n", r.number,
                        r.passed ? "PASS" : "FAIL", r.title.c_str(), r.seconds, r.note.c_str());
            std::fflush(stdout);
        }
    });
    for (const auto& r : rs) {
        all = all && r.passed;
        results.push_back({{"criterion", r.number},
                           {"title", r.title},
                           {"passed", r.passed},
                           {"note", r.note}});
    }
    ordered_json doc;
    doc["config"] = {{"command", "selftest"}};
    doc["results"] = results;
    emit(doc, jsonMode, all ? "selftest: all criteria passed\n" : "selftest: FAILURES present\n");
    return all ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact computations in grade-truncated current-algebra categories"};
    app.require_subcommand(1);
    int threads = 0;
    bool parallel = false;

    std::string algebra = "A1", jSpec = "0:1", object = "delta", weightArg = "0", kind = "covering";
    std::string fromArg, toArg, anchorArg, capArg, psiArg, fromFamily = "simple",
                toFamily = "simple", orderArg = "covering";
    int grade = 0, cutoff = 2, count = 12, radius = 0;
    bool jsonMode = false;

    auto addCommon = [&](CLI::App* cmd) {
        cmd->add_option("--algebra", algebra, "algebra type: A1, A2, A3, C2");
        cmd->add_flag("--json", jsonMode, "structured output");
        cmd->add_option("--threads", threads, "OpenMP thread count (0 = library default)");
        cmd->add_flag("--parallel", parallel, "fan independent sweeps out over all cores");
    };

    auto* cChar = app.add_subcommand("char", "graded character of a named family member");
    addCommon(cChar);
    cChar->add_option("--object", object, "simple|proj|inj|delta|gweyl|nabla");
    cChar->add_option("--weight", weightArg, "fundamental-weight coordinates, comma separated");
    cChar->add_option("--grade", grade, "grade of the generator");
    cChar->add_option("--J", jSpec, "interval a:b, ends may be -inf/+inf");
    cChar->add_option("--cutoff", cutoff, "window depth for unbounded intervals");

    auto* cObject = app.add_subcommand("object", "materialize a module and print its data");
    addCommon(cObject);
    cObject->add_option("--object", object, "simple|proj|inj|delta|gweyl|nabla");
    cObject->add_option("--weight", weightArg, "fundamental-weight coordinates");
    cObject->add_option("--grade", grade, "grade of the generator");
    cObject->add_option("--J", jSpec, "interval a:b");
    cObject->add_option("--cutoff", cutoff, "window depth for unbounded intervals");

    auto* cOrder = app.add_subcommand("order", "decide one of the partial orders on Λ");
    addCommon(cOrder);
    cOrder->add_option("--kind", kind, "lex|covering|psi");
    cOrder->add_option("--from", fromArg, "point: weight coords then grade")->required();
    cOrder->add_option("--to", toArg, "point: weight coords then grade")->required();
    cOrder->add_option("--psi", psiArg, "face weights, ';'-separated coordinate lists");
    cOrder->add_option("--radius", radius, "search radius for face computations");

    auto* cSset = app.add_subcommand("sset", "index set and enumeration for a tilting anchor");
    addCommon(cSset);
    cSset->add_option("--anchor", anchorArg, "weight coords then grade")->required();
    cSset->add_option("--J", jSpec, "interval a:b");
    cSset->add_option("--count", count, "enumeration prefix length for unbounded intervals");

    auto* cExt = app.add_subcommand("ext", "dimension of Ext1 between family members");
    addCommon(cExt);
    cExt->add_option("--from-family", fromFamily, "family of the first argument");
    cExt->add_option("--from", fromArg, "point: weight coords then grade")->required();
    cExt->add_option("--to-family", toFamily, "family of the second argument");
    cExt->add_option("--to", toArg, "point: weight coords then grade")->required();
    cExt->add_option("--J", jSpec, "interval a:b (finite b required)");

    auto* cTilt = app.add_subcommand("tilt", "build an indecomposable tilting module");
    addCommon(cTilt);
    cTilt->add_option("--anchor", anchorArg, "weight coords then grade")->required();
    cTilt->add_option("--J", jSpec, "finite interval a:b");

    auto* cBgg = app.add_subcommand("bgg", "reciprocity report on a capped window");
    addCommon(cBgg);
    cBgg->add_option("--J", jSpec, "finite interval a:b");
    cBgg->add_option("--cap", capArg, "weight cap, coordinate-wise")->required();

    auto* cTrivial = app.add_subcommand("trivial-tilt", "covering/face-order tilting report");
    addCommon(cTrivial);
    cTrivial->add_option("--J", jSpec, "finite interval a:b");
    cTrivial->add_option("--order", orderArg, "covering|psi");
    cTrivial->add_option("--cap", capArg, "weight cap, coordinate-wise")->required();
    cTrivial->add_option("--psi", psiArg, "face weights for the psi order");

    auto* cSelf = app.add_subcommand("selftest", "run the full invariant suite");
    cSelf->add_flag("--json", jsonMode, "structured output");
    cSelf->add_option("--threads", threads, "OpenMP thread count (0 = library default)");
    cSelf->add_flag("--parallel", parallel, "fan independent sweeps out over all cores");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
#ifdef _OPENMP
        if (threads > 0)
            omp_set_num_threads(threads);
        else if (!parallel)
            omp_set_num_threads(1);
#else
        (void)parallel;
#endif
        if (app.got_subcommand(cSelf)) return runSelftest(jsonMode);

        if (app.got_subcommand(cChar) || app.got_subcommand(cObject)) {
            const RootSystem& rs = algebraOf(algebra);
            auto fam = parseFamily(object);
            if (!fam) throw Usage("unknown object family: " + object);
            TruncationSpec g = TruncationSpec::parse(jSpec);
            BuildOptions opts;
            opts.cutoff = cutoff;
            FamilyTag tag{*fam, parseWeight(rs, weightArg), grade, g};
            BuiltObject built = buildObject(rs, tag, opts);
            ordered_json doc;
            doc["config"] = {{"command", app.got_subcommand(cChar) ? "char" : "object"},
                             {"algebra", algebra},
                             {"object", object},
                             {"weight", tag.lambda.c},
                             {"grade", grade},
                             {"J", g.str()}};
            if (app.got_subcommand(cChar)) {
                GradedCharacter ch = gradedCharacterOf(built.mod);
                doc["results"] = ordered_json::array({charJson(ch)});
                emit(doc, jsonMode, charToTable(ch));
            } else {
                doc["results"] =
                    ordered_json::array({ordered_json::parse(moduleToJson(built.mod))});
                std::ostringstream os;
                os << familyName(*fam) << "(" << weightStr(tag.lambda) << "," << grade
                   << ") on J=" << g.str() << ": dim " << built.mod.dim()
                   << (built.mod.certified ? " (complete)" : " (window-truncated)") << "\n";
                for (int s = built.mod.window.lo; s <= built.mod.window.hi; ++s)
                    os << "  grade " << s << ": dim " << built.mod.dimAtGrade(s) << "\n";
                if (built.capEscape) os << "  note: simple support escapes the weight cap\n";
                emit(doc, jsonMode, os.str());
            }
            return 0;
        }

        if (app.got_subcommand(cOrder)) {
            const RootSystem& rs = algebraOf(algebra);
            LamPoint from = parsePoint(rs, fromArg), to = parsePoint(rs, toArg);
            bool result;
            if (kind == "lex")
                result = lexLeq(rs, from, to);
            else if (kind == "covering")
                result = coveringLeq(rs, from, to);
            else if (kind == "psi") {
                if (psiArg.empty()) throw Usage("--psi required for the face order");
                std::set<Weight> psi;
                std::string cur;
                for (char c : psiArg + ";") {
                    if (c == ';') {
                        if (!cur.empty()) psi.insert(parseWeight(rs, cur));
                        cur.clear();
                    } else
                        cur += c;
                }
                PsiFace face = adjointFace(rs, psi);
                auto fc = psiFaceCheck(face, radius);
                if (!fc.ok) throw DomainError("not a face (radius " + std::to_string(fc.radius) +
                                              "): " + fc.witness);
                result = psiLeq(from, to, face, radius);
            } else
                throw Usage("unknown order kind: " + kind);
            ordered_json doc;
            doc["config"] = {{"command", "order"}, {"algebra", algebra},   {"kind", kind},
                             {"from", pointJson(from)}, {"to", pointJson(to)}};
            doc["results"] = ordered_json::array({result});
            emit(doc, jsonMode, std::string(result ? "true" : "false") + "\n");
            return 0;
        }

        if (app.got_subcommand(cSset)) {
            const RootSystem& rs = algebraOf(algebra);
            TruncationSpec g = TruncationSpec::parse(jSpec);
            LamPoint anchor = parsePoint(rs, anchorArg);
            int k = rs.dominantIndex(anchor.weight);
            auto enumeration = rs.enumerateDominant(k + 1);
            SSetSpec spec = buildSSet(rs, g, anchor, enumeration);
            EtaEnumeration eta = buildEta(rs, spec, g.a ? 0 : count);
            auto rep = verifyEnumeration(rs, spec, eta);
            ordered_json doc;
            doc["config"] = {{"command", "sset"},
                             {"algebra", algebra},
                             {"anchor", pointJson(anchor)},
                             {"J", g.str()}};
            ordered_json res;
            res["bounds"] = spec.rBound;
            if (spec.rPrime) res["untruncated_bounds"] = *spec.rPrime;
            if (spec.gaps) res["gaps"] = *spec.gaps;
            res["enumeration"] = ordered_json::array();
            for (const auto& p : eta.seq) res["enumeration"].push_back(pointJson(p));
            res["complete"] = eta.complete;
            res["invariants_ok"] = rep.ok;
            doc["results"] = ordered_json::array({res});
            std::ostringstream os;
            os << "weights:";
            for (int i = 0; i <= spec.k; ++i) os << " " << weightStr(enumeration[i]);
            os << "\nbounds r_i:";
            for (int b : spec.rBound) os << " " << b;
            os << "\n";
            if (spec.gaps) {
                os << "gaps a_i:";
                for (int a : *spec.gaps) os << " " << a;
                os << "\n";
            }
            os << "enumeration:";
            for (const auto& p : eta.seq) os << " " << labelStr(p);
            os << (eta.complete ? " (complete)" : " ...") << "\n";
            os << "invariants: " << (rep.ok ? "verified" : rep.detail) << " ("
               << rep.pairsChecked << " pairs, " << rep.extComputed << " Ext computations)\n";
            emit(doc, jsonMode, os.str());
            return rep.ok ? 0 : 1;
        }

        if (app.got_subcommand(cExt)) {
            const RootSystem& rs = algebraOf(algebra);
            TruncationSpec g = TruncationSpec::parse(jSpec);
            auto famA = parseFamily(fromFamily), famB = parseFamily(toFamily);
            if (!famA || !famB) throw Usage("unknown family");
            LamPoint from = parsePoint(rs, fromArg), to = parsePoint(rs, toArg);
            ExplicitModule M =
                buildObject(rs, FamilyTag{*famA, from.weight, from.grade, g}).mod;
            ExplicitModule N = buildObject(rs, FamilyTag{*famB, to.weight, to.grade, g}).mod;
            int dim = ext1(rs, M, N, g).dim;
            ordered_json doc;
            doc["config"] = {{"command", "ext"},      {"algebra", algebra},
                             {"from_family", fromFamily}, {"from", pointJson(from)},
                             {"to_family", toFamily},     {"to", pointJson(to)},
                             {"J", g.str()}};
            doc["results"] = ordered_json::array({dim});
            emit(doc, jsonMode, "dim Ext1 = " + std::to_string(dim) + "\n");
            return 0;
        }

        if (app.got_subcommand(cTilt)) {
            const RootSystem& rs = algebraOf(algebra);
            TruncationSpec g = TruncationSpec::parse(jSpec);
            LamPoint anchor = parsePoint(rs, anchorArg);
            TiltingBuild tb = buildTilting(rs, g, anchor);
            ordered_json doc;
            doc["config"] = {{"command", "tilt"},
                             {"algebra", algebra},
                             {"anchor", pointJson(anchor)},
                             {"J", g.str()}};
            doc["results"] = ordered_json::array();
            for (const auto& step : tb.tower)
                doc["results"].push_back({{"point", pointJson(step.point)},
                                          {"extensions", step.extensions},
                                          {"split_copies", step.splitCopies},
                                          {"dim", step.dimAfter}});
            doc["certificate"] = certJson(tb.cert);
            std::ostringstream os;
            os << "T" << labelStr(anchor) << " on J=" << g.str() << ": dim " << tb.T.dim()
               << "\n";
            for (const auto& [s, d] : tb.cert.highestLine)
                os << "T[" << s << "]_{" << weightStr(anchor.weight) << "} = " << d << "\n";
            os << "standard multiplicities:";
            for (const auto& [l, m] : tb.cert.deltaMults)
                os << " " << labelStr(l) << ":" << m;
            os << "\next sweep: " << tb.cert.extLog.size()
               << " points, all zero\nendomorphisms: dim " << tb.cert.endDim << ", radical "
               << tb.cert.radDim
               << (tb.cert.indecomposable ? ", indecomposable" : ", decomposable")
               << "\ncostandard filtration: " << (tb.cert.nablaFiltration ? "yes" : "no") << "\n";
            emit(doc, jsonMode, os.str());
            return 0;
        }

        if (app.got_subcommand(cBgg)) {
            const RootSystem& rs = algebraOf(algebra);
            TruncationSpec g = TruncationSpec::parse(jSpec);
            Weight cap = parseWeight(rs, capArg);
            BggReport rep = bggCheck(rs, g, cap);
            ordered_json doc;
            doc["config"] = {{"command", "bgg"},
                             {"algebra", algebra},
                             {"J", g.str()},
                             {"cap", weightJson(cap)}};
            doc["results"] = ordered_json::array(
                {{{"projective_convention_holds", rep.primaryConventionHolds},
                  {"swapped_convention_holds", rep.swappedConventionHolds},
                  {"injective_dual_route_holds", rep.dualRouteHolds},
                  {"pairs_checked", rep.pairsChecked}}});
            std::ostringstream os;
            os << "[P(l,r):W(m,s)] = [Delta(m,r):V(l,s)]: "
               << (rep.primaryConventionHolds ? "holds" : "fails") << "\n"
               << "[P(l,r):W(m,s)] = [Delta(m,s):V(l,r)]: "
               << (rep.swappedConventionHolds ? "holds" : "fails") << "\n"
               << "[I(l,r):Nabla(m,s)] = [Delta(-w0 m,s):V(-w0 l,r)]: "
               << (rep.dualRouteHolds ? "holds" : "fails") << "\n"
               << rep.pairsChecked << " pairs checked\n";
            if (!rep.detail.empty()) os << rep.detail;
            emit(doc, jsonMode, os.str());
            return 0;
        }

        if (app.got_subcommand(cTrivial)) {
            const RootSystem& rs = algebraOf(algebra);
            TruncationSpec g = TruncationSpec::parse(jSpec);
            Weight cap = parseWeight(rs, capArg);
            TrivialOrder ord;
            std::optional<PsiFace> face;
            if (orderArg == "covering")
                ord = TrivialOrder::Covering;
            else if (orderArg == "psi") {
                ord = TrivialOrder::Psi;
                if (psiArg.empty()) throw Usage("--psi required for the face order");
                std::set<Weight> psi;
                std::string cur;
                for (char c : psiArg + ";") {
                    if (c == ';') {
                        if (!cur.empty()) psi.insert(parseWeight(rs, cur));
                        cur.clear();
                    } else
                        cur += c;
                }
                face = adjointFace(rs, psi);
            } else
                throw Usage("unknown order: " + orderArg);
            TrivialTiltReport rep =
                trivialTiltingCheck(rs, g, cap, ord, face ? &*face : nullptr);
            ordered_json doc;
            doc["config"] = {{"command", "trivial-tilt"},
                             {"algebra", algebra},
                             {"J", g.str()},
                             {"order", orderArg},
                             {"cap", weightJson(cap)}};
            doc["results"] = ordered_json::array({{{"convex", rep.convex},
                                                   {"standard_is_simple", rep.standardIsSimple},
                                                   {"costandard_is_injective",
                                                    rep.costandardIsInjective},
                                                   {"reciprocity", rep.reciprocityHolds},
                                                   {"truncation_stable", rep.truncationStable},
                                                   {"ext_formula", rep.extFormulaHolds},
                                                   {"hom_order", rep.homOrderHolds},
                                                   {"ok", rep.ok()}}});
            std::ostringstream os;
            os << "convex: " << rep.convex << "\nstandard = simple: " << rep.standardIsSimple
               << "\ncostandard = injective: " << rep.costandardIsInjective
               << "\nreciprocity: " << rep.reciprocityHolds
               << "\ntruncation stable: " << rep.truncationStable
               << "\nExt formula: " << rep.extFormulaHolds
               << "\nHom order: " << rep.homOrderHolds << "\n"
               << (rep.ok() ? "all checks passed" : "FAILURES:\n" + rep.detail) << "\n";
            emit(doc, jsonMode, os.str());
            return rep.ok() ? 0 : 1;
        }

        throw Usage("no subcommand selected");
    } catch (const Usage& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
