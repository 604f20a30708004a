// Runs every acceptance criterion and prints one line per criterion.
// Exit status is the number of failing criteria.

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "xhopf/error.hpp"
#include "xhopf/examples.hpp"
#include "xhopf/io/document.hpp"
#include "xhopf_cli/cli.hpp"

namespace {

using namespace xhopf;

const std::filesystem::path kDocs = XHOPF_DOCUMENTS_DIR;
const FieldSpec kQ = FieldSpec::rational();
const FieldSpec kGF5 = FieldSpec::prime(5);

/// Collects failure notes; a criterion passes when none were recorded.
class Findings {
  public:
    void expect(bool ok, const std::string& what) {
        ++checked_;
        if (!ok)
            notes_.push_back(what);
    }
    void expect(const Report& r, const std::string& what) {
        if (r.ok()) {
            expect(true, what);
            return;
        }
        std::string first;
        for (const auto& c : r.checks())
            if (c.status() == CheckStatus::fail) {
                first = c.name();
                break;
            }
        expect(false, what + " (" + first + ")");
    }
    bool ok() const { return notes_.empty(); }
    std::size_t checked() const { return checked_; }
    const std::vector<std::string>& notes() const { return notes_; }

  private:
    std::size_t checked_ = 0;
    std::vector<std::string> notes_;
};

struct Named {
    std::string name;
    HopfXiCoalgebra a;
};

std::vector<std::string> cm_names() { return {"1->Z2", "id Z2", "Z2->1", "A3 in S3"}; }

/// The four constructors over the standard crossed modules, over one field.
std::vector<Named> constructor_outputs(FieldSpec f) {
    std::vector<Named> out;
    const auto cms = examples::standard_crossed_modules();
    const auto names = cm_names();
    for (std::size_t i = 0; i < cms.size(); ++i) {
        const std::string tag = " over " + names[i] + " " + f.name();
        out.push_back({"trivial" + tag, mk_trivial(f, cms[i])});
        out.push_back({"from H-action" + tag, examples::sign_twisted(f, cms[i])});
        out.push_back(
            {"from pi-coalgebra" + tag, mk_from_pi_coalgebra(cms[i], examples::constant_pi_coalgebra(f, cms[i]))});
    }
    out.push_back({"bicharacter Z2 " + f.name(), examples::bicharacter_z2(f)});
    return out;
}

std::vector<Named> every_example() {
    auto out = constructor_outputs(kQ);
    for (auto& n : constructor_outputs(kGF5))
        out.push_back(std::move(n));
    return out;
}

/// The structures whose integral spaces are stated to be one dimensional.
std::vector<Named> integral_examples() {
    const CrossedModule id_z2 = examples::identity_crossed_module(cyclic(2));
    return {{"k^omega[Z2]", examples::bicharacter_z2(kQ)},
            {"k_Xi over id Z2", mk_trivial(kQ, id_z2)},
            {"k_Xi over A3 in S3", mk_trivial(kQ, examples::a3_in_s3())},
            {"Q[Z2] twisted by g -> -g", examples::sign_twisted(kQ, id_z2)}};
}

void axiom_suite(Findings& f) {
    for (const auto& [name, a] : every_example()) {
        const Report r = validate_hopf_xi_coalgebra(a);
        f.expect(r, name);
        f.expect(r.total_violations() == 0, name + ": witnesses recorded");
    }
    // the bicharacter constructor on a second group pair
    const auto omega = examples::sign_bicharacter(kGF5);
    f.expect(validate_hopf_xi_coalgebra(mk_bicharacter_group_algebra(kGF5, cyclic(2), cyclic(2), omega)),
             "bicharacter constructor over GF(5)");
}

void integrals_theorem(Findings& f) {
    for (const auto& [name, a] : integral_examples())
        for (Side side : {Side::left, Side::right}) {
            const auto basis = integral_space(a, side);
            f.expect(basis.size() == 1, name + ": integral space has dimension " + std::to_string(basis.size()));
            for (const auto& l : basis)
                f.expect(check_integral(a, l), name + ": basis integral");
        }
}

void structure_theorem(Findings& f) {
    for (const auto& [name, a] : integral_examples()) {
        const HopfXiModule m = dual_hopf_module(a);
        f.expect(validate_hopf_xi_module(a, m), name + ": dual Hopf module");
        const StructureIso iso = structure_iso(a, m);
        for (Elem x = 0; x < a.H().order(); ++x) {
            const std::size_t n = a.dim(x) * iso.basis.size();
            f.expect(mat_mul(iso.nu[x], iso.epsilon[x]) == Matrix::identity(a.field(), n), name + ": nu epsilon = id");
            f.expect(mat_mul(iso.epsilon[x], iso.nu[x]) == Matrix::identity(a.field(), m.dims[x]),
                     name + ": epsilon nu = id");
        }
        const auto co = coinvariants(a, m);
        f.expect(co.size() == 1, name + ": coinvariants have dimension " + std::to_string(co.size()));
        for (const auto& c : co) {
            XiIntegral l{Side::right, {}};
            for (Elem y = 0; y < a.H().order(); ++y)
                l.lambda.push_back(c[a.H().inverse(y)]);
            f.expect(check_integral(a, l), name + ": coinvariant is a right integral");
            f.expect(std::any_of(l.lambda.begin(), l.lambda.end(), [](const Vector& v) { return !is_zero(v); }),
                     name + ": coinvariant is nonzero");
        }
    }
}

void action_identities(Findings& f) {
    for (const auto& [name, a] : every_example()) {
        f.expect(check_antipode_action_compat(a), name + ": antipode commutes with the action");
        const auto all = enumerate_grouplikes(a.base());
        f.expect(check_pairing_bicharacter(a, all), name + ": pairing is bimultiplicative");
        for (const auto& g : all) {
            const auto p = grouplike_pairing(a, g);
            f.expect(p.checks, name + ": pairing identities");
            for (Elem x = 0; x < a.H().order(); ++x)
                for (Elem e = 0; e < a.E().order(); ++e)
                    f.expect(mat_vec(a.phi(x, e), g[x]) == scale(g[a.cm().shift(e, x)], p.values[e]),
                             name + ": phi moves grouplikes by the pairing");
        }
    }
    const auto b = examples::bicharacter_z2(kQ);
    const GrouplikeFamily g{{Scalar(kQ, 0), Scalar(kQ, 1)}};
    f.expect(grouplike_pairing(b, g).values.at(1) == Scalar(kQ, -1), "k^omega[Z2]: <g,e> = -1");
    f.expect(enumerate_grouplikes(b.base()).size() == 2, "k^omega[Z2]: two grouplikes");
    const auto fixed = enumerate_xi_grouplikes(b);
    f.expect(fixed.size() == 1 && fixed.front() == unit_family(b.base()), "k^omega[Z2]: only 1 is Xi-grouplike");
}

void duality(Findings& f) {
    for (const auto& [name, a] : every_example()) {
        const HopfXiAlgebra d = dualize(a);
        f.expect(validate_hopf_xi_algebra(d), name + ": dual algebra");
        f.expect(dualize(d) == a, name + ": double dual of the coalgebra");
        f.expect(dualize(dualize(d)) == d, name + ": double dual of the algebra");
        f.expect(validate_hopf_xi_coalgebra(dualize(d)), name + ": dual of the dual algebra");
    }
}

void representation_category(Findings& f) {
    const auto a = mk_trivial(kQ, examples::identity_crossed_module(cyclic(2)));
    const FiniteGroup& e_group = a.E();
    const AModule k1 = unit_module(a), kh = concentrated(a, 1, Matrix::identity(kQ, 1));
    const std::vector<std::pair<std::string, AModule>> objects{
        {"k1", k1}, {"kh", kh}, {"k1 (x) kh", tensor_modules(a, k1, kh)}, {"kh (x) kh", tensor_modules(a, kh, kh)}};
    auto degree = [](const AModule& m) { return m.support().front(); };

    for (const auto& [xn, x] : objects)
        for (const auto& [yn, y] : objects)
            for (Elem e = 0; e < e_group.order(); ++e) {
                const auto basis = hom_space(a, x, y, e);
                const bool expected = degree(y) == a.cm().shift(e, degree(x));
                f.expect(basis.size() == (expected ? 1u : 0u), "dim Hom^" + std::to_string(e) + "(" + xn + ", " + yn + ")");
            }

    for (const auto& [xn, x] : objects)
        for (const auto& [yn, y] : objects)
            for (const auto& [zn, z] : objects)
                for (Elem d = 0; d < e_group.order(); ++d)
                    for (Elem e = 0; e < e_group.order(); ++e)
                        for (const auto& fm : hom_space(a, x, y, d))
                            for (const auto& gm : hom_space(a, y, z, e)) {
                                const GradedHom c = compose_homs(a, gm, fm);
                                f.expect(c.degree == e_group.mul(e, d) && is_graded_hom(a, x, z, c),
                                         "composition " + xn + " -> " + yn + " -> " + zn);
                            }

    for (const auto& [xn, x] : objects)
        for (const auto& [yn, y] : objects)
            for (const auto& [x2n, x2] : objects)
                for (const auto& [y2n, y2] : objects)
                    for (Elem d = 0; d < e_group.order(); ++d)
                        for (Elem e = 0; e < e_group.order(); ++e)
                            for (const auto& fm : hom_space(a, x, x2, d))
                                for (const auto& gm : hom_space(a, y, y2, e)) {
                                    const GradedHom t = tensor_homs(a, fm, gm, x, y, x2, y2);
                                    const Elem want = e_group.mul(d, a.cm().act(degree(x), e));
                                    f.expect(t.degree == want && is_graded_hom(a, tensor_modules(a, x, y),
                                                                               tensor_modules(a, x2, y2), t),
                                             "tensor " + xn + " (x) " + yn);
                                }

    std::vector<AModule> family;
    for (const auto& [n, m] : objects)
        family.push_back(m);
    for (Elem e = 0; e < e_group.order(); ++e)
        for (Elem g = 0; g < e_group.order(); ++g) {
            const EDirectSum xs = e_direct_sum(a, family, e);
            const EDirectSum ys = e_direct_sum(a, family, g);
            for (Elem d = 0; d < e_group.order(); ++d) {
                std::size_t expect = 0;
                const Elem twisted = e_group.mul(e_group.mul(e_group.inverse(g), d), e);
                for (const auto& x : family)
                    for (const auto& y : family)
                        expect += hom_space(a, x, y, twisted).size();
                f.expect(hom_space(a, xs.sum, ys.sum, d).size() == expect, "direct sum Hom dimension count");
            }
        }

    for (const auto& [n, m] : objects) {
        for (const GrouplikeFamily& g : {unit_family(a.base()), GrouplikeFamily{{Scalar(kQ, 1)}, {Scalar(kQ, -1)}}}) {
            const DualModule dm = dual_module(a, m, g);
            f.expect(dm.checks, n + ": dual zig-zags");
            f.expect(validate_module(a, dm.dual), n + ": dual module");
        }
    }
}

void distinguished(Findings& f) {
    for (const auto& [name, a] : integral_examples()) {
        const GrouplikeFamily g = distinguished_grouplike(a);
        f.expect(g == unit_family(a.base()), name + ": distinguished grouplike is 1");
        f.expect(is_xi_grouplike(a, g), name + ": distinguished grouplike is fixed");
        const XiIntegral right = integral_space(a, Side::right).front();
        const FieldSpec field = a.field();
        const std::size_t d = a.dim(0);
        const Matrix lambda = Matrix::row(field, right.lambda[0]);
        const Matrix lhs = mat_mul(kron(Matrix::identity(field, d), lambda), a.base().coproduct(0, 0));
        const Matrix rhs = mat_mul(Matrix::column(field, g[0]), lambda);
        f.expect(lhs == rhs, name + ": (id (x) lambda) Delta = g lambda in degree 1");
    }
    for (const auto& [name, a] : every_example())
        f.expect(is_xi_grouplike(a, distinguished_grouplike(a)), name + ": distinguished grouplike is fixed");
}

struct CliRun {
    int code;
    std::string out;
};

CliRun cli(const std::vector<std::string>& args) {
    std::istringstream in;
    std::ostringstream out, err;
    const int code = cli::run(args, in, out, err);
    return {code, out.str() + err.str()};
}

void mutation_sensitivity(Findings& f) {
    std::ifstream manifest(kDocs / "mutations" / "manifest.txt");
    std::string file, target;
    std::size_t count = 0;
    while (manifest >> file >> target) {
        ++count;
        const CliRun r = cli({"verify", target, "--json", "-i", (kDocs / "mutations" / file).string()});
        f.expect(r.code == cli::kCheckFailed, file + ": exit status " + std::to_string(r.code));
        f.expect(r.out.find("\"witnesses\": [\n") != std::string::npos ||
                     r.out.find("\"witnesses\": [\"") != std::string::npos,
                 file + ": no witness reported");
    }
    f.expect(count == 10, "manifest lists " + std::to_string(count) + " mutations");
}

/// Every CLI command over every shipped document and mutation.
std::string cli_suite(const std::string& jobs) {
    std::vector<std::vector<std::string>> runs;
    for (const auto& entry : std::filesystem::directory_iterator(kDocs)) {
        if (entry.path().extension() != ".json")
            continue;
        const std::string path = entry.path().string();
        std::ifstream in(entry.path());
        std::stringstream text;
        text << in.rdbuf();
        const auto doc = io::parse_document(text.str());
        auto add = [&](std::vector<std::string> args) {
            args.insert(args.end(), {"--json", "-j", jobs, "-i", path});
            runs.push_back(std::move(args));
        };
        add({"export"});
        for (const auto& [n, g] : doc.groups)
            add({"verify", n});
        for (const auto& [n, c] : doc.crossed_modules)
            add({"verify", n});
        for (const auto& [n, h] : doc.hopf) {
            add({"report", n});
            add({"structure-theorem", n, "dual"});
            for (const auto& [mn, m] : doc.modules)
                if (m.over == n)
                    for (const auto& [m2n, m2] : doc.modules)
                        if (m2.over == n)
                            add({"hom", n, mn, m2n});
        }
        for (const auto& [n, h] : doc.hopf_algebras)
            add({"dual", n});
        for (const auto& [n, m] : doc.modules)
            add({"verify", n});
        for (const auto& [n, m] : doc.hopf_modules) {
            add({"verify", n});
            add({"structure-theorem", m.over, n});
        }
        for (const auto& [n, g] : doc.grouplikes)
            add({"verify", n});
        for (const auto& [n, l] : doc.integrals)
            add({"verify", n});
    }
    std::ifstream manifest(kDocs / "mutations" / "manifest.txt");
    std::string file, target;
    while (manifest >> file >> target)
        runs.push_back({"verify", target, "-j", jobs, "-i", (kDocs / "mutations" / file).string()});
    std::sort(runs.begin(), runs.end());

    std::string all;
    for (const auto& args : runs) {
        const CliRun r = cli(args);
        for (const auto& a : args)
            all += a + ' ';
        all += "-> " + std::to_string(r.code) + '\n' + r.out;
    }
    return all;
}

void determinism(Findings& f) {
    const std::string first = cli_suite("1");
    const std::string second = cli_suite("1");
    f.expect(first == second, "two serial runs differ");
    f.expect(!first.empty(), "suite produced no output");
    f.expect(first.find("-> 2\n") == std::string::npos, "a suite command hit an input error");
    // the job count is part of each command line, so compare with it stripped
    auto strip = [](std::string s, const std::string& jobs) {
        const std::string flag = "-j " + jobs + " ";
        for (auto pos = s.find(flag); pos != std::string::npos; pos = s.find(flag))
            s.erase(pos, flag.size());
        return s;
    };
    f.expect(strip(first, "1") == strip(cli_suite("4"), "4"), "serial and parallel runs differ");
}

} // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<void(Findings&)>>> criteria{
        {"axiom suite: every constructor over every standard crossed module passes over Q and GF(5)", axiom_suite},
        {"integrals: left and right integral spaces are one dimensional", integrals_theorem},
        {"structure theorem: dual Hopf module, exact inverse pair, coinvariants are the right integrals",
         structure_theorem},
        {"action identities: antipode and action commute, grouplike pairing is a bicharacter", action_identities},
        {"duality: dualizing twice is the identity and duals pass the opposite validator", duality},
        {"representation category over k_Xi for id Z2: Hom dimensions, degree laws, direct sums, duals",
         representation_category},
        {"distinguished grouplike: unit on unimodular examples and fixed by the action", distinguished},
        {"mutation sensitivity: every shipped mutation fails with a witness", mutation_sensitivity},
        {"determinism: the CLI suite is byte-identical across runs and job counts", determinism},
    };
    int failed = 0;
    for (const auto& [name, run] : criteria) {
        Findings f;
        const auto start = std::chrono::steady_clock::now();
        try {
            run(f);
        } catch (const std::exception& e) {
            f.expect(false, std::string("threw ") + e.what());
        }
        const auto ms =
            std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
        std::cout << (f.ok() ? "PASS " : "FAIL ") << name << " (" << f.checked() << " checks, " << ms << " ms)\n";
        for (std::size_t i = 0; i < std::min<std::size_t>(f.notes().size(), 5); ++i)
            std::cout << "     " << f.notes()[i] << '\n';
        failed += f.ok() ? 0 : 1;
    }
    std::cout << (failed == 0 ? "all criteria pass" : std::to_string(failed) + " criteria failed") << '\n';
    return failed;
}
