#include "xhopf/io/document.hpp"

#include <functional>
#include <map>
#include <regex>
#include <set>

#include <nlohmann/json.hpp>

#include "xhopf/error.hpp"
#include "xhopf/examples.hpp"
#include "xhopf/io/json_text.hpp"

namespace xhopf::io {

using ojson = nlohmann::ordered_json;

namespace {

[[noreturn]] void syntax(const std::string& path, const std::string& what) {
    throw Error(ErrorCode::SyntaxError, "at " + (path.empty() ? std::string("/") : path) + ": " + what);
}

std::string sub(const std::string& path, const std::string& key) { return path + "/" + key; }
std::string sub(const std::string& path, std::size_t i) { return path + "/" + std::to_string(i); }

const ojson& member(const ojson& obj, const char* key, const std::string& path) {
    auto it = obj.find(key);
    if (it == obj.end())
        syntax(path, std::string("missing key \"") + key + "\"");
    return *it;
}

void allow_keys(const ojson& obj, std::initializer_list<const char*> keys, const std::string& path) {
    if (!obj.is_object())
        syntax(path, "expected an object");
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        bool ok = false;
        for (const char* k : keys)
            ok = ok || it.key() == k;
        if (!ok)
            syntax(path, "unexpected key \"" + it.key() + "\"");
    }
}

std::string as_string(const ojson& j, const std::string& path) {
    if (!j.is_string())
        syntax(path, "expected a string");
    return j.get<std::string>();
}

std::size_t as_count(const ojson& j, const std::string& path) {
    if (!j.is_number_integer() || j.get<long long>() < 0)
        syntax(path, "expected a nonnegative integer");
    return j.get<std::size_t>();
}

const ojson& as_array(const ojson& j, std::size_t size, const std::string& path) {
    if (!j.is_array())
        syntax(path, "expected an array");
    if (j.size() != size)
        throw Error(ErrorCode::ShapeMismatch,
                    "at " + path + ": expected " + std::to_string(size) + " entries, found " + std::to_string(j.size()));
    return j;
}

FieldSpec parse_field(const ojson& j, const std::string& path) {
    const std::string s = as_string(j, path);
    if (s == "Q")
        return FieldSpec::rational();
    static const std::regex gf(R"(GF\((\d{1,19})\))");
    std::smatch m;
    if (std::regex_match(s, m, gf)) {
        const auto p = std::stoull(m[1].str());
        if (!is_prime(p))
            syntax(path, s + " is not a prime field");
        return FieldSpec::prime(p);
    }
    syntax(path, "unknown field \"" + s + "\", expected \"Q\" or \"GF(p)\"");
}

Scalar parse_scalar(FieldSpec field, const ojson& j, const std::string& path) {
    if (field.is_rational()) {
        if (j.is_number_integer())
            return Scalar(field, mpq_class(j.dump()));
        if (!j.is_string())
            syntax(path, "expected a rational \"a/b\" or an integer");
        static const std::regex q(R"((-?)(\d+)(?:/(\d+))?)");
        const std::string s = j.get<std::string>();
        std::smatch m;
        if (!std::regex_match(s, m, q))
            syntax(path, "malformed rational \"" + s + "\"");
        mpz_class num(m[2].str()), den(1);
        if (m[3].matched)
            den = mpz_class(m[3].str());
        if (den == 0)
            syntax(path, "zero denominator in \"" + s + "\"");
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
        if (num != 0 && g != 1)
            syntax(path, "\"" + s + "\" is not in lowest terms");
        if (num == 0 && den != 1)
            syntax(path, "\"" + s + "\" is not in lowest terms");
        if (!m[1].str().empty())
            num = -num;
        return Scalar::fraction(field, num, den);
    }
    if (j.is_string())
        throw Error(ErrorCode::FieldMismatch, "at " + path + ": string scalar in " + field.name());
    if (!j.is_number_integer())
        syntax(path, "expected an integer residue");
    if (j.is_number_unsigned() ? j.get<std::uint64_t>() >= field.characteristic : true)
        syntax(path, "residue " + j.dump() + " outside 0.." + std::to_string(field.characteristic - 1));
    return Scalar(field, static_cast<long>(j.get<std::uint64_t>()));
}

Vector parse_vector(FieldSpec field, const ojson& j, std::size_t size, const std::string& path) {
    as_array(j, size, path);
    Vector v;
    for (std::size_t i = 0; i < size; ++i)
        v.push_back(parse_scalar(field, j[i], sub(path, i)));
    return v;
}

Vector parse_vector_any(FieldSpec field, const ojson& j, const std::string& path) {
    if (!j.is_array())
        syntax(path, "expected an array");
    return parse_vector(field, j, j.size(), path);
}

Matrix parse_matrix(FieldSpec field, const ojson& j, std::size_t rows, std::size_t cols, const std::string& path) {
    as_array(j, rows, path);
    Matrix m(field, rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        const Vector row = parse_vector(field, j[r], cols, sub(path, r));
        for (std::size_t c = 0; c < cols; ++c)
            m(r, c) = row[c];
    }
    return m;
}

Elem parse_element(const ojson& j, std::size_t order, const std::vector<std::string>& names, const std::string& path) {
    if (j.is_number_integer()) {
        const auto v = j.get<long long>();
        if (v < 0 || static_cast<std::size_t>(v) >= order)
            syntax(path, "element " + j.dump() + " out of range");
        return static_cast<Elem>(v);
    }
    if (j.is_string()) {
        for (std::size_t i = 0; i < names.size(); ++i)
            if (names[i] == j.get<std::string>())
                return i;
        throw Error(ErrorCode::ReferenceError, "at " + path + ": unknown element \"" + j.get<std::string>() + "\"");
    }
    syntax(path, "expected an element index or name");
}

ojson scalar_json(const Scalar& s) {
    if (s.field().is_rational())
        return s.to_string();
    return s.residue();
}

ojson vector_json(const Vector& v) {
    ojson a = ojson::array();
    for (const auto& s : v)
        a.push_back(scalar_json(s));
    return a;
}

ojson matrix_json(const Matrix& m) {
    ojson a = ojson::array();
    for (std::size_t r = 0; r < m.rows(); ++r)
        a.push_back(vector_json(m.row_vector(r)));
    return a;
}

template <class T>
struct Section {
    const char* name;
    std::vector<std::pair<std::string, const ojson*>> raw;
    std::map<std::string, T> done;
    std::set<std::string> active;
};

class Parser {
  public:
    explicit Parser(const ojson& root) : root_(root) {}

    StructureDocument run() {
        allow_keys(root_, {"field", "description", "groups", "crossed_modules", "hopf", "hopf_algebras", "modules",
                           "hopf_modules", "grouplikes", "integrals"},
                   "");
        doc_.field = parse_field(member(root_, "field", ""), "/field");
        collect(groups_);
        collect(cms_);
        collect(hopf_);
        collect(algebras_);
        collect(modules_);
        collect(hopf_modules_);
        collect(grouplikes_);
        collect(integrals_);
        finish(groups_, doc_.groups, &Parser::build_group);
        finish(cms_, doc_.crossed_modules, &Parser::build_cm);
        finish(hopf_, doc_.hopf, &Parser::build_hopf);
        finish(algebras_, doc_.hopf_algebras, &Parser::build_algebra);
        finish(modules_, doc_.modules, &Parser::build_module);
        finish(hopf_modules_, doc_.hopf_modules, &Parser::build_hopf_module);
        finish(grouplikes_, doc_.grouplikes, &Parser::build_grouplike);
        finish(integrals_, doc_.integrals, &Parser::build_integral);
        return std::move(doc_);
    }

  private:
    template <class T>
    void collect(Section<T>& s) {
        auto it = root_.find(s.name);
        if (it == root_.end())
            return;
        if (!it->is_object())
            syntax(std::string("/") + s.name, "expected an object of named entries");
        for (auto e = it->begin(); e != it->end(); ++e)
            s.raw.emplace_back(e.key(), &e.value());
    }

    template <class T>
    using Builder = T (Parser::*)(const ojson&, const std::string&);

    template <class T>
    const T& get(Section<T>& s, const std::string& name, const std::string& from, Builder<T> build) {
        if (auto it = s.done.find(name); it != s.done.end())
            return it->second;
        const ojson* raw = nullptr;
        for (const auto& [n, j] : s.raw)
            if (n == name)
                raw = j;
        if (!raw)
            throw Error(ErrorCode::ReferenceError,
                        "at " + from + ": no entry \"" + name + "\" in section " + s.name);
        if (s.active.count(name))
            throw Error(ErrorCode::ReferenceError, "at " + from + ": cyclic reference through " + s.name + "/" + name);
        s.active.insert(name);
        T value = (this->*build)(*raw, std::string("/") + s.name + "/" + name);
        s.active.erase(name);
        return s.done.emplace(name, std::move(value)).first->second;
    }

    template <class T>
    void finish(Section<T>& s, Named<T>& out, Builder<T> build) {
        for (const auto& [name, j] : s.raw)
            out.emplace_back(name, get(s, name, std::string("/") + s.name, build));
    }

    FieldSpec field() const { return doc_.field; }

    // Groups are referenced by name or written inline.
    GroupEntry group_ref(const ojson& j, const std::string& path) {
        if (j.is_string())
            return get(groups_, j.get<std::string>(), path, &Parser::build_group);
        return build_group(j, path);
    }

    GroupEntry build_group(const ojson& j, const std::string& path) {
        allow_keys(j, {"order", "table", "elements", "cyclic", "symmetric", "direct_product"}, path);
        GroupEntry g;
        if (j.contains("cyclic")) {
            const auto n = as_count(j["cyclic"], sub(path, "cyclic"));
            if (n == 0)
                syntax(sub(path, "cyclic"), "order must be positive");
            g.group = cyclic(n);
        } else if (j.contains("symmetric")) {
            g.group = symmetric(as_count(j["symmetric"], sub(path, "symmetric")));
        } else if (j.contains("direct_product")) {
            const ojson& parts = as_array(j["direct_product"], 2, sub(path, "direct_product"));
            const GroupEntry a = group_ref(parts[0], sub(sub(path, "direct_product"), 0));
            const GroupEntry b = group_ref(parts[1], sub(sub(path, "direct_product"), 1));
            g.group = direct_product(a.group, b.group);
        } else {
            const std::size_t n = as_count(member(j, "order", path), sub(path, "order"));
            if (n == 0)
                syntax(sub(path, "order"), "order must be positive");
            const ojson& t = as_array(member(j, "table", path), n, sub(path, "table"));
            std::vector<std::vector<Elem>> table(n, std::vector<Elem>(n));
            for (std::size_t a = 0; a < n; ++a) {
                as_array(t[a], n, sub(sub(path, "table"), a));
                for (std::size_t b = 0; b < n; ++b)
                    table[a][b] = parse_element(t[a][b], n, {}, sub(sub(sub(path, "table"), a), b));
            }
            g.group = FiniteGroup(std::move(table));
        }
        if (j.contains("elements")) {
            const ojson& names = as_array(j["elements"], g.group.order(), sub(path, "elements"));
            std::set<std::string> seen;
            for (std::size_t i = 0; i < names.size(); ++i) {
                g.names.push_back(as_string(names[i], sub(sub(path, "elements"), i)));
                if (!seen.insert(g.names.back()).second)
                    syntax(sub(sub(path, "elements"), i), "duplicate element name");
            }
        }
        return g;
    }

    CrossedModuleEntry cm_ref(const ojson& j, const std::string& path) {
        if (j.is_string()) {
            CrossedModuleEntry e = get(cms_, j.get<std::string>(), path, &Parser::build_cm);
            return e;
        }
        CrossedModuleEntry e = build_cm(j, path);
        return e;
    }

    // Fills e_group/h_group with the referenced names.
    void named_groups(CrossedModuleEntry& e, const ojson& eg, const ojson& hg) {
        if (eg.is_string())
            e.e_group = eg.get<std::string>();
        if (hg.is_string())
            e.h_group = hg.get<std::string>();
    }

    CrossedModuleEntry build_cm(const ojson& j, const std::string& path) {
        allow_keys(j, {"E", "H", "xi", "action", "identity", "trivial_over", "to_point", "normal_subgroup", "elements"},
                   path);
        CrossedModuleEntry out;
        auto single = [&](const char* key) -> GroupEntry {
            const GroupEntry g = group_ref(j[key], sub(path, key));
            return g;
        };
        if (j.contains("identity")) {
            const GroupEntry g = single("identity");
            out.cm = examples::identity_crossed_module(g.group);
            named_groups(out, j["identity"], j["identity"]);
            out.e_names = out.h_names = g.names;
        } else if (j.contains("trivial_over")) {
            const GroupEntry g = single("trivial_over");
            out.cm = trivial_over(g.group);
            named_groups(out, ojson(), j["trivial_over"]);
            out.h_names = g.names;
        } else if (j.contains("to_point")) {
            const GroupEntry g = single("to_point");
            out.cm = abelian_to_point(g.group);
            named_groups(out, j["to_point"], ojson());
            out.e_names = g.names;
        } else if (j.contains("normal_subgroup")) {
            const GroupEntry g = single("normal_subgroup");
            const ojson& els = member(j, "elements", path);
            if (!els.is_array())
                syntax(sub(path, "elements"), "expected an array");
            std::vector<Elem> elements;
            for (std::size_t i = 0; i < els.size(); ++i)
                elements.push_back(parse_element(els[i], g.group.order(), g.names, sub(sub(path, "elements"), i)));
            out.cm = inclusion(subgroup_embedding(g.group, elements));
            named_groups(out, ojson(), j["normal_subgroup"]);
            out.h_names = g.names;
        } else {
            const GroupEntry e = group_ref(member(j, "E", path), sub(path, "E"));
            const GroupEntry h = group_ref(member(j, "H", path), sub(path, "H"));
            const ojson& xi = as_array(member(j, "xi", path), e.group.order(), sub(path, "xi"));
            std::vector<Elem> xi_map;
            for (std::size_t i = 0; i < xi.size(); ++i)
                xi_map.push_back(parse_element(xi[i], h.group.order(), h.names, sub(sub(path, "xi"), i)));
            const ojson& act = as_array(member(j, "action", path), h.group.order(), sub(path, "action"));
            std::vector<std::vector<Elem>> table;
            for (std::size_t x = 0; x < act.size(); ++x) {
                as_array(act[x], e.group.order(), sub(sub(path, "action"), x));
                table.emplace_back();
                for (std::size_t k = 0; k < e.group.order(); ++k)
                    table.back().push_back(
                        parse_element(act[x][k], e.group.order(), e.names, sub(sub(sub(path, "action"), x), k)));
            }
            out.cm = CrossedModule(e.group, h.group, std::move(xi_map), std::move(table));
            named_groups(out, j["E"], j["H"]);
            out.e_names = e.names;
            out.h_names = h.names;
        }
        return out;
    }

    HopfEntry hopf_ref(const std::string& name, const std::string& path) {
        return get(hopf_, name, path, &Parser::build_hopf);
    }

    // The crossed module of a hopf entry: a name or an inline object.
    void attach_cm(HopfEntry& out, const ojson& j, const std::string& path) {
        const CrossedModuleEntry cm = cm_ref(j, path);
        if (j.is_string())
            out.crossed_module = j.get<std::string>();
        out.e_names = cm.e_names;
        out.h_names = cm.h_names;
    }

    std::vector<std::vector<Scalar>> parse_table(const ojson& j, std::size_t rows, std::size_t cols,
                                                 const std::string& path) {
        const Matrix m = parse_matrix(field(), j, rows, cols, path);
        std::vector<std::vector<Scalar>> out(rows);
        for (std::size_t r = 0; r < rows; ++r)
            out[r] = m.row_vector(r);
        return out;
    }

    HopfEntry build_hopf(const ojson& j, const std::string& path) {
        HopfEntry out;
        if (!j.is_object())
            syntax(path, "expected an object");
        if (!j.contains("construct")) {
            allow_keys(j, {"crossed_module", "components", "coproduct", "counit", "antipode", "phi"}, path);
            const ojson& cmj = member(j, "crossed_module", path);
            const CrossedModule cm = cm_ref(cmj, sub(path, "crossed_module")).cm;
            attach_cm(out, cmj, sub(path, "crossed_module"));
            out.value = explicit_coalgebra(cm, j, path);
            return out;
        }
        const std::string kind = as_string(j["construct"], sub(path, "construct"));
        if (kind == "trivial") {
            allow_keys(j, {"construct", "crossed_module"}, path);
            const ojson& cmj = member(j, "crossed_module", path);
            attach_cm(out, cmj, sub(path, "crossed_module"));
            out.value = mk_trivial(field(), cm_ref(cmj, sub(path, "crossed_module")).cm);
        } else if (kind == "bicharacter") {
            allow_keys(j, {"construct", "E", "G", "omega"}, path);
            const GroupEntry e = group_ref(member(j, "E", path), sub(path, "E"));
            const GroupEntry g = group_ref(member(j, "G", path), sub(path, "G"));
            const auto omega = parse_table(member(j, "omega", path), e.group.order(), g.group.order(), sub(path, "omega"));
            out.value = mk_bicharacter_group_algebra(field(), e.group, g.group, omega);
            out.e_names = e.names;
        } else if (kind == "group_algebra") {
            allow_keys(j, {"construct", "group"}, path);
            const GroupEntry g = group_ref(member(j, "group", path), sub(path, "group"));
            const GradedHopfCoalgebra base = examples::group_hopf_algebra(field(), g.group);
            out.value = HopfXiCoalgebra(CrossedModule(), base, {Matrix::identity(field(), g.group.order())});
        } else if (kind == "from_h_action") {
            allow_keys(j, {"construct", "crossed_module", "hopf", "rho"}, path);
            const ojson& cmj = member(j, "crossed_module", path);
            const CrossedModule cm = cm_ref(cmj, sub(path, "crossed_module")).cm;
            attach_cm(out, cmj, sub(path, "crossed_module"));
            const HopfEntry base = hopf_ref(as_string(member(j, "hopf", path), sub(path, "hopf")), sub(path, "hopf"));
            const std::size_t d = base.value.dim(0);
            const ojson& rj = as_array(member(j, "rho", path), cm.H().order(), sub(path, "rho"));
            std::vector<Matrix> rho;
            for (std::size_t x = 0; x < rj.size(); ++x)
                rho.push_back(parse_matrix(field(), rj[x], d, d, sub(sub(path, "rho"), x)));
            out.value = mk_from_h_action(cm, base.value.base(), rho);
        } else if (kind == "from_pi_coalgebra") {
            allow_keys(j, {"construct", "crossed_module", "base"}, path);
            const ojson& cmj = member(j, "crossed_module", path);
            const CrossedModule cm = cm_ref(cmj, sub(path, "crossed_module")).cm;
            attach_cm(out, cmj, sub(path, "crossed_module"));
            const HopfEntry base = hopf_ref(as_string(member(j, "base", path), sub(path, "base")), sub(path, "base"));
            out.value = mk_from_pi_coalgebra(cm, base.value.base());
        } else if (kind == "dualize") {
            allow_keys(j, {"construct", "of"}, path);
            const AlgebraEntry a =
                get(algebras_, as_string(member(j, "of", path), sub(path, "of")), sub(path, "of"), &Parser::build_algebra);
            out.crossed_module = a.crossed_module;
            out.e_names = a.e_names;
            out.h_names = a.h_names;
            out.value = dualize(a.value);
        } else {
            syntax(sub(path, "construct"), "unknown constructor \"" + kind + "\"");
        }
        return out;
    }

    HopfXiCoalgebra explicit_coalgebra(const CrossedModule& cm, const ojson& j, const std::string& path) {
        const FiniteGroup& h = cm.H();
        const std::size_t n = h.order(), ne = cm.E().order();
        const ojson& cj = as_array(member(j, "components", path), n, sub(path, "components"));
        std::vector<ComponentAlgebra> comps;
        for (std::size_t x = 0; x < n; ++x) {
            const std::string p = sub(sub(path, "components"), x);
            allow_keys(cj[x], {"unit", "product"}, p);
            const Vector unit = parse_vector_any(field(), member(cj[x], "unit", p), sub(p, "unit"));
            const std::size_t d = unit.size();
            comps.emplace_back(parse_matrix(field(), member(cj[x], "product", p), d, d * d, sub(p, "product")), unit);
        }
        auto dim = [&](Elem x) { return comps[x].dim(); };
        const ojson& dj = as_array(member(j, "coproduct", path), n, sub(path, "coproduct"));
        std::vector<Matrix> coproduct;
        for (Elem x = 0; x < n; ++x) {
            as_array(dj[x], n, sub(sub(path, "coproduct"), x));
            for (Elem y = 0; y < n; ++y)
                coproduct.push_back(parse_matrix(field(), dj[x][y], dim(x) * dim(y), dim(h.mul(x, y)),
                                                 sub(sub(sub(path, "coproduct"), x), y)));
        }
        const Vector counit = parse_vector(field(), member(j, "counit", path), dim(h.identity()), sub(path, "counit"));
        std::optional<std::vector<Matrix>> antipode;
        if (j.contains("antipode")) {
            const ojson& sj = as_array(j["antipode"], n, sub(path, "antipode"));
            antipode.emplace();
            for (Elem x = 0; x < n; ++x) {
                const Elem xinv = h.inverse(x);
                if (xinv >= n)
                    throw Error(ErrorCode::ShapeMismatch, "at " + path + ": H has no inverse of " + std::to_string(x));
                antipode->push_back(parse_matrix(field(), sj[x], dim(x), dim(xinv), sub(sub(path, "antipode"), x)));
            }
        }
        const ojson& pj = as_array(member(j, "phi", path), n, sub(path, "phi"));
        std::vector<Matrix> phi;
        for (Elem x = 0; x < n; ++x) {
            as_array(pj[x], ne, sub(sub(path, "phi"), x));
            for (Elem e = 0; e < ne; ++e)
                phi.push_back(
                    parse_matrix(field(), pj[x][e], dim(cm.shift(e, x)), dim(x), sub(sub(sub(path, "phi"), x), e)));
        }
        GradedHopfCoalgebra base(h, std::move(comps), std::move(coproduct), Matrix::row(field(), counit),
                                 std::move(antipode));
        return HopfXiCoalgebra(cm, std::move(base), std::move(phi));
    }

    AlgebraEntry build_algebra(const ojson& j, const std::string& path) {
        AlgebraEntry out;
        if (!j.is_object())
            syntax(path, "expected an object");
        if (j.contains("construct")) {
            allow_keys(j, {"construct", "of"}, path);
            if (as_string(j["construct"], sub(path, "construct")) != "dualize")
                syntax(sub(path, "construct"), "hopf algebras support only \"dualize\"");
            const HopfEntry c = hopf_ref(as_string(member(j, "of", path), sub(path, "of")), sub(path, "of"));
            out.crossed_module = c.crossed_module;
            out.e_names = c.e_names;
            out.h_names = c.h_names;
            out.value = dualize(c.value);
            return out;
        }
        allow_keys(j, {"crossed_module", "comul", "counit", "product", "unit", "antipode", "phi"}, path);
        const ojson& cmj = member(j, "crossed_module", path);
        const CrossedModuleEntry cme = cm_ref(cmj, sub(path, "crossed_module"));
        if (cmj.is_string())
            out.crossed_module = cmj.get<std::string>();
        out.e_names = cme.e_names;
        out.h_names = cme.h_names;
        const CrossedModule& cm = cme.cm;
        const FiniteGroup& h = cm.H();
        const std::size_t n = h.order(), ne = cm.E().order();
        const ojson& cj = as_array(member(j, "counit", path), n, sub(path, "counit"));
        std::vector<Matrix> counit;
        std::vector<std::size_t> dims;
        for (Elem x = 0; x < n; ++x) {
            const Vector v = parse_vector_any(field(), cj[x], sub(sub(path, "counit"), x));
            dims.push_back(v.size());
            counit.push_back(Matrix::row(field(), v));
        }
        const ojson& mj = as_array(member(j, "comul", path), n, sub(path, "comul"));
        std::vector<Matrix> comul;
        for (Elem x = 0; x < n; ++x)
            comul.push_back(parse_matrix(field(), mj[x], dims[x] * dims[x], dims[x], sub(sub(path, "comul"), x)));
        const ojson& pj = as_array(member(j, "product", path), n, sub(path, "product"));
        std::vector<Matrix> product;
        for (Elem x = 0; x < n; ++x) {
            as_array(pj[x], n, sub(sub(path, "product"), x));
            for (Elem y = 0; y < n; ++y)
                product.push_back(parse_matrix(field(), pj[x][y], dims[h.mul(x, y)], dims[x] * dims[y],
                                               sub(sub(sub(path, "product"), x), y)));
        }
        const Vector unit = parse_vector(field(), member(j, "unit", path), dims[h.identity()], sub(path, "unit"));
        const ojson& sj = as_array(member(j, "antipode", path), n, sub(path, "antipode"));
        std::vector<Matrix> antipode;
        for (Elem x = 0; x < n; ++x) {
            const Elem xinv = h.inverse(x);
            if (xinv >= n)
                throw Error(ErrorCode::ShapeMismatch, "at " + path + ": H has no inverse of " + std::to_string(x));
            antipode.push_back(parse_matrix(field(), sj[x], dims[xinv], dims[x], sub(sub(path, "antipode"), x)));
        }
        const ojson& fj = as_array(member(j, "phi", path), n, sub(path, "phi"));
        std::vector<Matrix> phi;
        for (Elem x = 0; x < n; ++x) {
            as_array(fj[x], ne, sub(sub(path, "phi"), x));
            for (Elem e = 0; e < ne; ++e)
                phi.push_back(parse_matrix(field(), fj[x][e], dims[cm.shift(e, x)], dims[x],
                                           sub(sub(sub(path, "phi"), x), e)));
        }
        out.value = HopfXiAlgebra(cm, std::move(comul), std::move(counit), std::move(product), unit,
                                  std::move(antipode), std::move(phi));
        return out;
    }

    HopfEntry over(const ojson& j, const std::string& path, std::string& name) {
        name = as_string(member(j, "over", path), sub(path, "over"));
        return hopf_ref(name, sub(path, "over"));
    }

    ModuleEntry module_ref(const ojson& j, const std::string& path) {
        return get(modules_, as_string(j, path), path, &Parser::build_module);
    }

    ModuleEntry build_module(const ojson& j, const std::string& path) {
        ModuleEntry out;
        if (!j.is_object())
            syntax(path, "expected an object");
        const HopfEntry a = over(j, path, out.over);
        const HopfXiCoalgebra& alg = a.value;
        const std::size_t n = alg.H().order();
        auto h_elem = [&](const char* key) {
            return parse_element(member(j, key, path), n, a.h_names, sub(path, key));
        };
        auto e_elem = [&](const char* key) {
            return parse_element(member(j, key, path), alg.E().order(), a.e_names, sub(path, key));
        };
        auto same_base = [&](const ModuleEntry& m, const std::string& p) {
            if (m.over != out.over)
                throw Error(ErrorCode::ReferenceError, "at " + p + ": module is over \"" + m.over + "\", not \"" +
                                                           out.over + "\"");
        };
        if (!j.contains("construct")) {
            allow_keys(j, {"over", "dims", "action"}, path);
            const ojson& dj = as_array(member(j, "dims", path), n, sub(path, "dims"));
            const ojson& aj = as_array(member(j, "action", path), n, sub(path, "action"));
            for (Elem x = 0; x < n; ++x) {
                const std::size_t m = as_count(dj[x], sub(sub(path, "dims"), x));
                out.value.dims.push_back(m);
                out.value.action.push_back(
                    parse_matrix(field(), aj[x], m, alg.dim(x) * m, sub(sub(path, "action"), x)));
            }
            return out;
        }
        const std::string kind = as_string(j["construct"], sub(path, "construct"));
        if (kind == "unit") {
            allow_keys(j, {"over", "construct"}, path);
            out.value = unit_module(alg);
        } else if (kind == "regular") {
            allow_keys(j, {"over", "construct", "degree"}, path);
            out.value = regular_module(alg, h_elem("degree"));
        } else if (kind == "concentrated") {
            allow_keys(j, {"over", "construct", "degree", "action"}, path);
            const Elem x = h_elem("degree");
            const ojson& aj = member(j, "action", path);
            if (!aj.is_array())
                syntax(sub(path, "action"), "expected an array");
            out.value = concentrated(alg, x, parse_matrix(field(), aj, aj.size(), alg.dim(x) * aj.size(), sub(path, "action")));
        } else if (kind == "tensor") {
            allow_keys(j, {"over", "construct", "of"}, path);
            const ojson& of = as_array(member(j, "of", path), 2, sub(path, "of"));
            const ModuleEntry l = module_ref(of[0], sub(sub(path, "of"), 0));
            const ModuleEntry r = module_ref(of[1], sub(sub(path, "of"), 1));
            same_base(l, sub(sub(path, "of"), 0));
            same_base(r, sub(sub(path, "of"), 1));
            out.value = tensor_modules(alg, l.value, r.value);
        } else if (kind == "pullback") {
            allow_keys(j, {"over", "construct", "of", "degree"}, path);
            const ModuleEntry m = module_ref(member(j, "of", path), sub(path, "of"));
            same_base(m, sub(path, "of"));
            out.value = pullback_phi_e(alg, m.value, e_elem("degree"));
        } else if (kind == "direct_sum") {
            allow_keys(j, {"over", "construct", "of", "degree"}, path);
            const ojson& of = member(j, "of", path);
            if (!of.is_array())
                syntax(sub(path, "of"), "expected an array");
            std::vector<AModule> parts;
            for (std::size_t i = 0; i < of.size(); ++i) {
                const ModuleEntry m = module_ref(of[i], sub(sub(path, "of"), i));
                same_base(m, sub(sub(path, "of"), i));
                parts.push_back(m.value);
            }
            const Elem e = j.contains("degree") ? e_elem("degree") : alg.E().identity();
            out.value = e_direct_sum(alg, parts, e).sum;
        } else {
            syntax(sub(path, "construct"), "unknown constructor \"" + kind + "\"");
        }
        return out;
    }

    HopfModuleEntry build_hopf_module(const ojson& j, const std::string& path) {
        HopfModuleEntry out;
        if (!j.is_object())
            syntax(path, "expected an object");
        const HopfEntry a = over(j, path, out.over);
        const HopfXiCoalgebra& alg = a.value;
        const FiniteGroup& h = alg.H();
        const std::size_t n = h.order(), ne = alg.E().order();
        if (j.contains("construct")) {
            const std::string kind = as_string(j["construct"], sub(path, "construct"));
            if (kind == "trivial") {
                allow_keys(j, {"over", "construct", "dim"}, path);
                out.value = trivial_hopf_module(alg, as_count(member(j, "dim", path), sub(path, "dim")));
            } else if (kind == "dual") {
                allow_keys(j, {"over", "construct"}, path);
                out.value = dual_hopf_module(alg);
            } else {
                syntax(sub(path, "construct"), "unknown constructor \"" + kind + "\"");
            }
            return out;
        }
        allow_keys(j, {"over", "dims", "action", "coaction", "psi"}, path);
        HopfXiModule& m = out.value;
        const ojson& dj = as_array(member(j, "dims", path), n, sub(path, "dims"));
        for (Elem x = 0; x < n; ++x)
            m.dims.push_back(as_count(dj[x], sub(sub(path, "dims"), x)));
        const ojson& aj = as_array(member(j, "action", path), n, sub(path, "action"));
        for (Elem x = 0; x < n; ++x)
            m.action.push_back(parse_matrix(field(), aj[x], m.dims[x], alg.dim(x) * m.dims[x], sub(sub(path, "action"), x)));
        const ojson& cj = as_array(member(j, "coaction", path), n, sub(path, "coaction"));
        for (Elem x = 0; x < n; ++x) {
            as_array(cj[x], n, sub(sub(path, "coaction"), x));
            for (Elem y = 0; y < n; ++y)
                m.coaction.push_back(parse_matrix(field(), cj[x][y], alg.dim(x) * m.dims[y], m.dims[h.mul(x, y)],
                                                  sub(sub(sub(path, "coaction"), x), y)));
        }
        const ojson& pj = as_array(member(j, "psi", path), n, sub(path, "psi"));
        for (Elem x = 0; x < n; ++x) {
            as_array(pj[x], ne, sub(sub(path, "psi"), x));
            for (Elem e = 0; e < ne; ++e)
                m.psi.push_back(parse_matrix(field(), pj[x][e], m.dims[alg.cm().shift(e, x)], m.dims[x],
                                             sub(sub(sub(path, "psi"), x), e)));
        }
        return out;
    }

    GrouplikeEntry build_grouplike(const ojson& j, const std::string& path) {
        GrouplikeEntry out;
        if (!j.is_object())
            syntax(path, "expected an object");
        allow_keys(j, {"over", "family"}, path);
        const HopfEntry a = over(j, path, out.over);
        const std::size_t n = a.value.H().order();
        const ojson& fj = as_array(member(j, "family", path), n, sub(path, "family"));
        for (Elem x = 0; x < n; ++x)
            out.family.push_back(parse_vector(field(), fj[x], a.value.dim(x), sub(sub(path, "family"), x)));
        return out;
    }

    IntegralEntry build_integral(const ojson& j, const std::string& path) {
        IntegralEntry out;
        if (!j.is_object())
            syntax(path, "expected an object");
        allow_keys(j, {"over", "side", "lambda"}, path);
        const HopfEntry a = over(j, path, out.over);
        const std::string side = as_string(member(j, "side", path), sub(path, "side"));
        if (side == "left")
            out.value.side = Side::left;
        else if (side == "right")
            out.value.side = Side::right;
        else
            syntax(sub(path, "side"), "expected \"left\" or \"right\"");
        const std::size_t n = a.value.H().order();
        const ojson& lj = as_array(member(j, "lambda", path), n, sub(path, "lambda"));
        for (Elem x = 0; x < n; ++x)
            out.value.lambda.push_back(parse_vector(field(), lj[x], a.value.dim(x), sub(sub(path, "lambda"), x)));
        return out;
    }

    const ojson& root_;
    StructureDocument doc_;
    Section<GroupEntry> groups_{"groups", {}, {}, {}};
    Section<CrossedModuleEntry> cms_{"crossed_modules", {}, {}, {}};
    Section<HopfEntry> hopf_{"hopf", {}, {}, {}};
    Section<AlgebraEntry> algebras_{"hopf_algebras", {}, {}, {}};
    Section<ModuleEntry> modules_{"modules", {}, {}, {}};
    Section<HopfModuleEntry> hopf_modules_{"hopf_modules", {}, {}, {}};
    Section<GrouplikeEntry> grouplikes_{"grouplikes", {}, {}, {}};
    Section<IntegralEntry> integrals_{"integrals", {}, {}, {}};
};

ojson group_json(const FiniteGroup& g, const std::vector<std::string>& names) {
    ojson j;
    j["order"] = g.order();
    ojson t = ojson::array();
    for (const auto& row : g.table())
        t.push_back(row);
    j["table"] = t;
    if (!names.empty())
        j["elements"] = names;
    return j;
}

ojson cm_json(const CrossedModule& cm, const std::string& e_group, const std::string& h_group,
              const std::vector<std::string>& e_names, const std::vector<std::string>& h_names) {
    ojson j;
    j["E"] = e_group.empty() ? group_json(cm.E(), e_names) : ojson(e_group);
    j["H"] = h_group.empty() ? group_json(cm.H(), h_names) : ojson(h_group);
    j["xi"] = cm.xi_map();
    j["action"] = cm.action_table();
    return j;
}

ojson cm_field(const std::string& name, const CrossedModule& cm, const std::vector<std::string>& e_names,
               const std::vector<std::string>& h_names) {
    if (!name.empty())
        return name;
    return cm_json(cm, "", "", e_names, h_names);
}

ojson nested(const std::vector<Matrix>& flat, std::size_t outer, std::size_t inner) {
    ojson j = ojson::array();
    for (std::size_t x = 0; x < outer; ++x) {
        ojson row = ojson::array();
        for (std::size_t y = 0; y < inner; ++y)
            row.push_back(matrix_json(flat[x * inner + y]));
        j.push_back(row);
    }
    return j;
}

ojson list_json(const std::vector<Matrix>& ms) {
    ojson j = ojson::array();
    for (const auto& m : ms)
        j.push_back(matrix_json(m));
    return j;
}

ojson hopf_json(const HopfEntry& e) {
    const HopfXiCoalgebra& a = e.value;
    const std::size_t n = a.H().order();
    ojson j;
    j["crossed_module"] = cm_field(e.crossed_module, a.cm(), e.e_names, e.h_names);
    ojson comps = ojson::array();
    for (const auto& c : a.base().components()) {
        ojson cj;
        cj["unit"] = vector_json(c.unit());
        cj["product"] = matrix_json(c.mul());
        comps.push_back(cj);
    }
    j["components"] = comps;
    j["coproduct"] = nested(a.base().coproducts(), n, n);
    j["counit"] = vector_json(a.base().counit().row_vector(0));
    if (a.base().has_antipode())
        j["antipode"] = list_json(*a.base().antipodes());
    j["phi"] = nested(a.phis(), n, a.E().order());
    return j;
}

ojson algebra_json(const AlgebraEntry& e) {
    const HopfXiAlgebra& a = e.value;
    const std::size_t n = a.H().order();
    ojson j;
    j["crossed_module"] = cm_field(e.crossed_module, a.cm(), e.e_names, e.h_names);
    j["comul"] = list_json(a.comuls());
    ojson counit = ojson::array();
    for (const auto& c : a.counits())
        counit.push_back(vector_json(c.row_vector(0)));
    j["counit"] = counit;
    j["product"] = nested(a.products(), n, n);
    j["unit"] = vector_json(a.unit());
    j["antipode"] = list_json(a.antipodes());
    j["phi"] = nested(a.phis(), n, a.cm().E().order());
    return j;
}

} // namespace

StructureDocument parse_document(std::string_view text) {
    ojson root;
    try {
        root = ojson::parse(text.begin(), text.end());
    } catch (const ojson::parse_error& e) {
        throw Error(ErrorCode::SyntaxError, "byte " + std::to_string(e.byte) + ": malformed JSON");
    }
    return Parser(root).run();
}

std::string serialize_document(const StructureDocument& doc) {
    ojson j;
    j["field"] = doc.field.name();
    if (!doc.groups.empty()) {
        ojson& g = j["groups"];
        for (const auto& [name, e] : doc.groups)
            g[name] = group_json(e.group, e.names);
    }
    if (!doc.crossed_modules.empty()) {
        ojson& c = j["crossed_modules"];
        for (const auto& [name, e] : doc.crossed_modules)
            c[name] = cm_json(e.cm, e.e_group, e.h_group, e.e_names, e.h_names);
    }
    if (!doc.hopf.empty()) {
        ojson& h = j["hopf"];
        for (const auto& [name, e] : doc.hopf)
            h[name] = hopf_json(e);
    }
    if (!doc.hopf_algebras.empty()) {
        ojson& h = j["hopf_algebras"];
        for (const auto& [name, e] : doc.hopf_algebras)
            h[name] = algebra_json(e);
    }
    if (!doc.modules.empty()) {
        ojson& m = j["modules"];
        for (const auto& [name, e] : doc.modules) {
            ojson mj;
            mj["over"] = e.over;
            mj["dims"] = e.value.dims;
            mj["action"] = list_json(e.value.action);
            m[name] = mj;
        }
    }
    if (!doc.hopf_modules.empty()) {
        ojson& m = j["hopf_modules"];
        for (const auto& [name, e] : doc.hopf_modules) {
            const std::size_t n = e.value.dims.size();
            ojson mj;
            mj["over"] = e.over;
            mj["dims"] = e.value.dims;
            mj["action"] = list_json(e.value.action);
            mj["coaction"] = nested(e.value.coaction, n, n);
            mj["psi"] = nested(e.value.psi, n, n == 0 ? 0 : e.value.psi.size() / n);
            m[name] = mj;
        }
    }
    if (!doc.grouplikes.empty()) {
        ojson& g = j["grouplikes"];
        for (const auto& [name, e] : doc.grouplikes) {
            ojson fam = ojson::array();
            for (const auto& v : e.family)
                fam.push_back(vector_json(v));
            g[name] = {{"over", e.over}, {"family", fam}};
        }
    }
    if (!doc.integrals.empty()) {
        ojson& g = j["integrals"];
        for (const auto& [name, e] : doc.integrals) {
            ojson lam = ojson::array();
            for (const auto& v : e.value.lambda)
                lam.push_back(vector_json(v));
            g[name] = {{"over", e.over}, {"side", e.value.side == Side::left ? "left" : "right"}, {"lambda", lam}};
        }
    }
    return compact_dump(j);
}

Elem resolve_element(std::string_view token, std::size_t order, const std::vector<std::string>& names) {
    for (std::size_t i = 0; i < names.size(); ++i)
        if (names[i] == token)
            return i;
    if (!token.empty() && token.find_first_not_of("0123456789") == std::string_view::npos) {
        const auto v = std::stoull(std::string(token));
        if (v < order)
            return v;
    }
    throw Error(ErrorCode::InvalidArgument, "unknown element \"" + std::string(token) + "\"");
}

} // namespace xhopf::io
