#include "xhopf_cli/cli.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "report_format.hpp"
#include "xhopf/error.hpp"
#include "xhopf/io/document.hpp"
#include "xhopf/io/json_text.hpp"

namespace xhopf::cli {

std::string fnv1a64(std::string_view bytes) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

namespace {

using io::StructureDocument;

[[noreturn]] void missing(const std::string& what, const std::string& name) {
    throw Error(ErrorCode::ReferenceError, "no " + what + " named \"" + name + "\"");
}

ojson matrix_json(const Matrix& m) {
    ojson rows = ojson::array();
    for (std::size_t r = 0; r < m.rows(); ++r)
        rows.push_back(vector_json(m.row_vector(r)));
    return rows;
}

ojson family_json(const std::vector<Vector>& family) {
    ojson out = ojson::array();
    for (const auto& v : family)
        out.push_back(vector_json(v));
    return out;
}

std::string element_name(Elem x, const std::vector<std::string>& names) {
    return x < names.size() ? names[x] : std::to_string(x);
}

/// A check that records an exception from a computation as its only witness.
template <class F>
bool guarded(Report& report, const std::string& name, F&& f) {
    Check c(name);
    try {
        f(c);
    } catch (const Error& e) {
        c.fail(e.what());
    }
    const bool ok = c.status() != CheckStatus::fail;
    report.add(std::move(c));
    return ok;
}

class Session {
  public:
    Session(StructureDocument doc, ValidationOptions opts) : doc_(std::move(doc)), opts_(opts) {}

    Report report;
    ojson outputs = ojson::object();

    const io::HopfEntry& hopf(const std::string& name) const {
        if (const auto* h = io::lookup(doc_.hopf, name))
            return *h;
        missing("hopf entry", name);
    }

    const io::ModuleEntry& module_over(const std::string& name, const std::string& over) const {
        const auto* m = io::lookup(doc_.modules, name);
        if (!m)
            missing("module", name);
        if (m->over != over)
            throw Error(ErrorCode::ReferenceError, "module \"" + name + "\" is over \"" + m->over + "\", not \"" + over + "\"");
        return *m;
    }

    void verify(const std::string& name) {
        std::vector<std::string> sections;
        auto note = [&](bool found, const char* section) {
            if (found)
                sections.push_back(section);
        };
        note(io::lookup(doc_.groups, name), "groups");
        note(io::lookup(doc_.crossed_modules, name), "crossed_modules");
        note(io::lookup(doc_.hopf, name), "hopf");
        note(io::lookup(doc_.hopf_algebras, name), "hopf_algebras");
        note(io::lookup(doc_.modules, name), "modules");
        note(io::lookup(doc_.hopf_modules, name), "hopf_modules");
        note(io::lookup(doc_.grouplikes, name), "grouplikes");
        note(io::lookup(doc_.integrals, name), "integrals");
        if (sections.empty())
            missing("entry", name);
        if (sections.size() > 1)
            throw Error(ErrorCode::ReferenceError, "name \"" + name + "\" is defined in " + sections[0] + " and " +
                                                       sections[1]);
        const std::string& s = sections.front();
        outputs["kind"] = s;
        if (s == "groups") {
            const auto& g = io::lookup(doc_.groups, name)->group;
            outputs["order"] = g.order();
            report.merge(validate_group(g));
        } else if (s == "crossed_modules") {
            const auto& cm = io::lookup(doc_.crossed_modules, name)->cm;
            outputs["order of E"] = cm.E().order();
            outputs["order of H"] = cm.H().order();
            report.merge(validate_crossed_module(cm));
        } else if (s == "hopf") {
            const auto& a = hopf(name).value;
            ojson dims = ojson::array();
            for (Elem x = 0; x < a.H().order(); ++x)
                dims.push_back(a.dim(x));
            outputs["dims"] = dims;
            report.merge(validate_hopf_xi_coalgebra(a, opts_));
        } else if (s == "hopf_algebras") {
            const auto& a = io::lookup(doc_.hopf_algebras, name)->value;
            ojson dims = ojson::array();
            for (Elem x = 0; x < a.H().order(); ++x)
                dims.push_back(a.dim(x));
            outputs["dims"] = dims;
            report.merge(validate_hopf_xi_algebra(a, opts_));
        } else if (s == "modules") {
            const auto& m = *io::lookup(doc_.modules, name);
            outputs["over"] = m.over;
            outputs["dims"] = m.value.dims;
            report.merge(validate_module(hopf(m.over).value, m.value));
        } else if (s == "hopf_modules") {
            const auto& m = *io::lookup(doc_.hopf_modules, name);
            outputs["over"] = m.over;
            outputs["dims"] = m.value.dims;
            report.merge(validate_hopf_xi_module(hopf(m.over).value, m.value, opts_));
        } else if (s == "grouplikes") {
            const auto& g = *io::lookup(doc_.grouplikes, name);
            const auto& a = hopf(g.over).value;
            outputs["over"] = g.over;
            const Report base = grouplike_report(a.base(), g.family);
            report.merge(base);
            if (base.ok()) {
                const GrouplikePairing p = grouplike_pairing(a, g.family);
                report.merge(p.checks);
                outputs["pairing"] = vector_json(p.values);
                outputs["xi-grouplike"] = is_xi_grouplike(a, g.family);
            }
        } else {
            const auto& l = *io::lookup(doc_.integrals, name);
            const auto& a = hopf(l.over).value;
            outputs["over"] = l.over;
            outputs["side"] = l.value.side == Side::left ? "left" : "right";
            report.merge(check_integral(a, l.value));
            Check nonzero("integral: nonzero");
            bool any = false;
            for (const auto& v : l.value.lambda)
                any = any || !is_zero(v);
            nonzero.expect(any, [] { return std::string("every lambda_x is zero"); });
            report.add(std::move(nonzero));
        }
    }

    void integrals(const std::string& name, std::optional<Side> only) {
        const auto& a = hopf(name).value;
        std::vector<XiIntegral> left, right;
        for (Side side : {Side::left, Side::right}) {
            if (only && *only != side)
                continue;
            const char* label = side == Side::left ? "left" : "right";
            auto space = integral_space(a, side, opts_);
            ojson out;
            out["dim"] = space.size();
            ojson basis = ojson::array();
            for (const auto& l : space)
                basis.push_back(family_json(l.lambda));
            out["basis"] = basis;
            outputs[label] = out;
            Check dim(std::string("integrals: ") + label + " space is one dimensional");
            dim.expect(space.size() == 1, [&] { return "dimension " + std::to_string(space.size()); });
            report.add(std::move(dim));
            for (std::size_t i = 0; i < space.size(); ++i)
                report.merge(check_integral(a, space[i]), std::string(label) + " basis " + std::to_string(i) + ": ");
            (side == Side::left ? left : right) = std::move(space);
        }
        if (left.size() == 1 && right.size() == 1) {
            guarded(report, "integrals: antipode transport of the left integral is a right integral", [&](Check& c) {
                const XiIntegral t = antipode_transport(a, left.front());
                const Report r = check_integral(a, t);
                for (const auto& rc : r.checks())
                    if (rc.status() == CheckStatus::fail)
                        c.fail(rc.name());
            });
        }
    }

    void grouplikes(const std::string& name) {
        const auto& entry = hopf(name);
        const auto& a = entry.value;
        const auto all = enumerate_grouplikes(a.base());
        const auto fixed = enumerate_xi_grouplikes(a);
        ojson list = ojson::array();
        for (const auto& g : all)
            list.push_back(family_json(g));
        outputs["grouplikes"] = list;
        ojson xlist = ojson::array();
        for (const auto& g : fixed)
            xlist.push_back(family_json(g));
        outputs["xi-grouplikes"] = xlist;
        ojson pairings = ojson::array();
        for (std::size_t i = 0; i < all.size(); ++i) {
            const GrouplikePairing p = grouplike_pairing(a, all[i]);
            report.merge(p.checks, "grouplike " + std::to_string(i) + ": ");
            pairings.push_back(vector_json(p.values));
        }
        outputs["pairings"] = pairings;
        report.merge(check_pairing_bicharacter(a, all));
        guarded(report, "distinguished grouplike: defining identities", [&](Check& c) {
            const GrouplikeFamily g = distinguished_grouplike(a, opts_);
            outputs["distinguished"] = family_json(g);
            c.expect(is_xi_grouplike(a, g), [] { return std::string("not fixed by the xi-action"); });
        });
    }

    void dual(const std::string& name) {
        if (const auto* c = io::lookup(doc_.hopf, name)) {
            outputs["from"] = "hopf xi-coalgebra";
            HopfXiAlgebra d;
            if (!guarded(report, "dual: dualize", [&](Check&) { d = dualize(c->value); }))
                return;
            report.merge(validate_hopf_xi_algebra(d, opts_), "dual: ");
            Check back("dual: dualizing twice gives back the input");
            back.expect(dualize(d) == c->value, [] { return std::string("structure constants differ"); });
            report.add(std::move(back));
        } else if (const auto* alg = io::lookup(doc_.hopf_algebras, name)) {
            outputs["from"] = "hopf xi-algebra";
            HopfXiCoalgebra d;
            if (!guarded(report, "dual: dualize", [&](Check&) { d = dualize(alg->value); }))
                return;
            report.merge(validate_hopf_xi_coalgebra(d, opts_), "dual: ");
            Check back("dual: dualizing twice gives back the input");
            back.expect(dualize(d) == alg->value, [] { return std::string("structure constants differ"); });
            report.add(std::move(back));
        } else {
            missing("hopf entry or hopf algebra", name);
        }
    }

    void structure_theorem(const std::string& name, const std::string& module) {
        const auto& a = hopf(name).value;
        HopfXiModule m;
        if (module == "dual") {
            if (!guarded(report, "structure theorem: dual hopf module is valid", [&](Check&) {
                    m = dual_hopf_module(a, opts_);
                }))
                return;
        } else {
            const auto* e = io::lookup(doc_.hopf_modules, module);
            if (!e)
                missing("hopf module", module);
            if (e->over != name)
                throw Error(ErrorCode::ReferenceError, "hopf module \"" + module + "\" is over \"" + e->over + "\"");
            m = e->value;
            const Report r = validate_hopf_xi_module(a, m, opts_);
            report.merge(r);
            if (!r.ok())
                return;
        }
        const CoinvariantsBasis co = coinvariants(a, m);
        ojson basis = ojson::array();
        for (const auto& fam : co)
            basis.push_back(family_json(fam));
        outputs["coinvariants dim"] = co.size();
        outputs["coinvariants"] = basis;
        if (module == "dual") {
            Check one("structure theorem: coinvariants of the dual module are one dimensional");
            one.expect(co.size() == 1, [&] { return "dimension " + std::to_string(co.size()); });
            report.add(std::move(one));
        }
        guarded(report, "structure theorem: A (x) M^coA -> M is invertible with the stated inverse",
                [&](Check&) { (void)structure_iso(a, m); });
    }

    void hom(const std::string& name, const std::string& m_name, const std::string& n_name,
             const std::optional<std::string>& degree) {
        const auto& entry = hopf(name);
        const auto& a = entry.value;
        const AModule& m = module_over(m_name, name).value;
        const AModule& n = module_over(n_name, name).value;
        std::vector<Elem> degrees;
        if (degree)
            degrees.push_back(io::resolve_element(*degree, a.E().order(), entry.e_names));
        else
            for (Elem e = 0; e < a.E().order(); ++e)
                degrees.push_back(e);
        for (const Report& r : {validate_module(a, m), validate_module(a, n)})
            if (!r.ok()) {
                report.merge(r, "hom: ");
                return;
            }
        std::vector<std::vector<GradedHom>> spaces;
        if (degree) {
            spaces.push_back(hom_space(a, m, n, degrees.front()));
        } else {
            spaces = hom_spaces(a, m, n, opts_);
        }
        Check linear("hom: every basis morphism is an A-linear map of its degree");
        Check indep("hom: basis is linearly independent");
        for (std::size_t k = 0; k < degrees.size(); ++k) {
            const Elem e = degrees[k];
            const std::string label = "degree " + element_name(e, entry.e_names);
            ojson out;
            out["dim"] = spaces[k].size();
            ojson basis = ojson::array();
            std::vector<Vector> flat;
            for (std::size_t i = 0; i < spaces[k].size(); ++i) {
                const GradedHom& f = spaces[k][i];
                ojson blocks = ojson::array();
                Vector v;
                for (const auto& b : f.blocks) {
                    blocks.push_back(matrix_json(b));
                    v.insert(v.end(), b.data().begin(), b.data().end());
                }
                basis.push_back(blocks);
                flat.push_back(std::move(v));
                const Report r = check_graded_hom(a, m, n, f);
                for (const auto& c : r.checks())
                    if (c.status() == CheckStatus::fail)
                        linear.fail(label + ", basis " + std::to_string(i) + ": " + c.name());
            }
            if (!flat.empty() && !flat.front().empty()) {
                const std::size_t r = rank(from_columns(a.field(), flat.front().size(), flat));
                indep.expect(r == flat.size(), [&] { return label + ": rank " + std::to_string(r); });
            }
            out["basis"] = basis;
            outputs[label] = out;
        }
        report.add(std::move(linear));
        report.add(std::move(indep));
    }

    void full_report(const std::string& name) {
        hopf(name);
        auto section = [&](const char* key, auto&& body) {
            Report saved = std::move(report);
            ojson saved_out = std::move(outputs);
            report = Report();
            outputs = ojson::object();
            body();
            saved.merge(report, std::string(key) + ": ");
            saved_out[key] = outputs;
            report = std::move(saved);
            outputs = std::move(saved_out);
        };
        section("verify", [&] { verify(name); });
        section("integrals", [&] { integrals(name, std::nullopt); });
        section("grouplikes", [&] { grouplikes(name); });
        section("dual", [&] { dual(name); });
        section("structure theorem", [&] { structure_theorem(name, "dual"); });
    }

    const StructureDocument& doc() const { return doc_; }

  private:
    StructureDocument doc_;
    ValidationOptions opts_;
};

std::string read_input(const std::string& path, std::istream& in) {
    std::ostringstream buf;
    if (path == "-") {
        buf << in.rdbuf();
        return buf.str();
    }
    std::ifstream file(path, std::ios::binary);
    if (!file)
        throw Error(ErrorCode::InvalidArgument, "cannot open \"" + path + "\"");
    buf << file.rdbuf();
    return buf.str();
}

} // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Build and check crossed-module graded Hopf structures from a structure document", "xhopf"};
    app.require_subcommand(1);
    app.fallthrough();
    std::string input = "-";
    bool json = false;
    unsigned jobs = 1;
    app.add_option("-i,--input", input, "Structure document, or - for standard input");
    app.add_flag("--json", json, "Emit the report as JSON");
    app.add_option("-j,--jobs", jobs, "Worker threads for the validators")->check(CLI::Range(1u, 256u));

    std::vector<std::string> targets;
    std::string side;
    std::string degree;

    auto* verify = app.add_subcommand("verify", "Run every validator that applies to a named entry");
    verify->add_option("name", targets, "Entry name")->required()->expected(1);
    auto* integrals = app.add_subcommand("integrals", "Solve for the left and right Xi-integrals");
    integrals->add_option("name", targets, "Hopf entry")->required()->expected(1);
    integrals->add_option("--side", side, "left or right")->check(CLI::IsMember({"left", "right"}));
    auto* grouplikes = app.add_subcommand("grouplikes", "Enumerate grouplikes and the pairing with E");
    grouplikes->add_option("name", targets, "Hopf entry")->required()->expected(1);
    auto* dual = app.add_subcommand("dual", "Dualize and check the result and the double dual");
    dual->add_option("name", targets, "Hopf entry or Hopf algebra")->required()->expected(1);
    auto* structure = app.add_subcommand("structure-theorem", "Coinvariants and the structure isomorphism");
    structure->add_option("names", targets, "Hopf entry, then a Hopf module or \"dual\"")->required()->expected(2);
    auto* hom = app.add_subcommand("hom", "Bases of the graded Hom spaces between two modules");
    hom->add_option("names", targets, "Hopf entry and two modules")->required()->expected(3);
    hom->add_option("--degree", degree, "Element of E, by name or index");
    auto* report = app.add_subcommand("report", "verify, integrals, grouplikes, dual and structure-theorem dual");
    report->add_option("name", targets, "Hopf entry")->required()->expected(1);
    auto* exp = app.add_subcommand("export", "Print the document with every directive expanded");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kPass;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kInputError;
    }

    const CLI::App* cmd = app.get_subcommands().front();
    std::string text;
    StructureDocument doc;
    try {
        text = read_input(input, in);
        doc = io::parse_document(text);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kInputError;
    }
    if (cmd == exp) {
        out << io::serialize_document(doc);
        return kPass;
    }

    Session session(std::move(doc), ValidationOptions{jobs});
    try {
        if (cmd == verify)
            session.verify(targets[0]);
        else if (cmd == integrals)
            session.integrals(targets[0], side.empty() ? std::nullopt
                                                       : std::optional<Side>(side == "left" ? Side::left : Side::right));
        else if (cmd == grouplikes)
            session.grouplikes(targets[0]);
        else if (cmd == dual)
            session.dual(targets[0]);
        else if (cmd == structure)
            session.structure_theorem(targets[0], targets[1]);
        else if (cmd == hom)
            session.hom(targets[0], targets[1], targets[2],
                        degree.empty() ? std::nullopt : std::optional<std::string>(degree));
        else
            session.full_report(targets[0]);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kInputError;
    }

    ojson j;
    j["command"] = cmd->get_name();
    j["targets"] = targets;
    j["input"] = "fnv1a64:" + fnv1a64(text);
    j["checks"] = checks_json(session.report);
    j["outputs"] = session.outputs;
    const bool ok = session.report.ok();
    j["summary"] = {{"result", ok ? "pass" : "fail"},
                    {"checks", session.report.checks().size()},
                    {"failed", session.report.failed_count()}};
    out << (json ? io::compact_dump(j) : render_text(j));
    return ok ? kPass : kCheckFailed;
}

} // namespace xhopf::cli
