#include "admd/topology_file.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

#include "admd/units.hpp"

namespace admd {

namespace {

struct Line {
    int number;
    std::string text;
};

[[noreturn]] void fail(const std::string& origin, int line, const std::string& msg) {
    throw ParseError(origin + ":" + std::to_string(line) + ": " + msg);
}

std::string strip(std::string s) {
    const auto hash = s.find('#');
    if (hash != std::string::npos) s.erase(hash);
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) return {};
    const auto last = s.find_last_not_of(" \t\r\n");
    return s.substr(first, last - first + 1);
}

int intern(std::vector<std::string>& names, const std::string& name) {
    const auto it = std::find(names.begin(), names.end(), name);
    if (it != names.end()) return static_cast<int>(it - names.begin());
    names.push_back(name);
    return static_cast<int>(names.size()) - 1;
}

class Cursor {
public:
    Cursor(const std::string& origin, int line, const std::string& text)
        : origin_(origin), line_(line), in_(text) {}

    int next_int() {
        long v;
        if (!(in_ >> v)) fail(origin_, line_, "expected an integer field");
        return static_cast<int>(v);
    }
    double next_double() {
        double v;
        if (!(in_ >> v)) fail(origin_, line_, "expected a numeric field");
        return v;
    }
    std::string next_word() {
        std::string w;
        if (!(in_ >> w)) fail(origin_, line_, "expected a name field");
        return w;
    }
    bool next_double_opt(double& v) { return static_cast<bool>(in_ >> v); }
    bool next_int_opt(int& v) {
        long x;
        if (!(in_ >> x)) return false;
        v = static_cast<int>(x);
        return true;
    }
    void expect_end() {
        std::string w;
        if (in_ >> w) fail(origin_, line_, "unexpected trailing field '" + w + "'");
    }

private:
    const std::string& origin_;
    int line_;
    std::istringstream in_;
};

} // namespace

TopologyFile parse_topology_text(std::string_view text, const std::string& origin) {
    // Split into sections keyed by header lines like "[sites]".
    std::map<std::string, std::vector<Line>> sections;
    std::string current;
    std::istringstream stream{std::string(text)};
    std::string raw;
    int line_no = 0;
    while (std::getline(stream, raw)) {
        ++line_no;
        const std::string line = strip(raw);
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line.back() != ']') fail(origin, line_no, "malformed section header");
            current = line.substr(1, line.size() - 2);
            if (sections.count(current)) fail(origin, line_no, "duplicate section [" + current + "]");
            sections[current];
            continue;
        }
        if (current.empty()) fail(origin, line_no, "content before any section header");
        sections[current].push_back({line_no, line});
    }

    static const char* known[] = {"sites",        "bonds",        "angles",  "dihedrals",
                                  "nonbonded_fg", "nonbonded_cg", "mapping"};
    for (const auto& [name, lines] : sections) {
        if (std::find_if(std::begin(known), std::end(known),
                         [&](const char* k) { return name == k; }) == std::end(known))
            fail(origin, lines.empty() ? 0 : lines.front().number, "unknown section [" + name + "]");
    }
    for (const char* required : {"sites", "nonbonded_fg", "nonbonded_cg", "mapping"})
        if (!sections.count(required))
            throw ParseError(origin + ": missing required section [" + std::string(required) + "]");

    TopologyFile out;
    MoleculeTemplate& tmpl = out.tmpl;

    // [sites]: index  type_name  mass_u
    {
        const auto& lines = sections["sites"];
        if (lines.empty()) throw ParseError(origin + ": [sites] section is empty");
        tmpl.site_masses.resize(lines.size());
        tmpl.site_types.resize(lines.size());
        std::vector<bool> seen(lines.size(), false);
        for (const Line& l : lines) {
            Cursor c(origin, l.number, l.text);
            const int idx = c.next_int();
            const std::string type = c.next_word();
            const double mass = c.next_double();
            c.expect_end();
            if (idx < 0 || idx >= static_cast<int>(lines.size()))
                fail(origin, l.number, "site index out of range (expect 0.." +
                                           std::to_string(lines.size() - 1) + ")");
            if (seen[std::size_t(idx)]) fail(origin, l.number, "duplicate site index");
            if (!(mass > 0.0)) fail(origin, l.number, "site mass must be positive");
            seen[std::size_t(idx)] = true;
            tmpl.site_masses[std::size_t(idx)] = mass;
            tmpl.site_types[std::size_t(idx)] = intern(out.fg_type_names, type);
        }
        tmpl.total_mass = 0.0;
        for (double m : tmpl.site_masses) tmpl.total_mass += m;
    }
    const int n_sites = tmpl.n_sites();
    auto check_site = [&](int idx, int line) {
        if (idx < 0 || idx >= n_sites) fail(origin, line, "bonded term references unknown site");
    };

    // [bonds]: i  j  k  r0
    for (const Line& l : sections["bonds"]) {
        Cursor c(origin, l.number, l.text);
        BondTerm t;
        t.i = c.next_int();
        t.j = c.next_int();
        BondParam p;
        p.k = c.next_double();
        p.r0 = c.next_double();
        c.expect_end();
        check_site(t.i, l.number);
        check_site(t.j, l.number);
        if (t.i == t.j) fail(origin, l.number, "bond connects a site to itself");
        if (p.k < 0.0 || p.r0 <= 0.0) fail(origin, l.number, "bond parameters out of range");
        t.param = static_cast<int>(tmpl.bond_params.size());
        tmpl.bond_params.push_back(p);
        tmpl.bonds.push_back(t);
    }

    // [angles]: i  j  k  k_theta  theta0_deg
    for (const Line& l : sections["angles"]) {
        Cursor c(origin, l.number, l.text);
        AngleTerm t;
        t.i = c.next_int();
        t.j = c.next_int();
        t.k = c.next_int();
        AngleParam p;
        p.k = c.next_double();
        p.theta0 = units::deg_to_rad(c.next_double());
        c.expect_end();
        check_site(t.i, l.number);
        check_site(t.j, l.number);
        check_site(t.k, l.number);
        if (p.k < 0.0) fail(origin, l.number, "angle force constant must be >= 0");
        t.param = static_cast<int>(tmpl.angle_params.size());
        tmpl.angle_params.push_back(p);
        tmpl.angles.push_back(t);
    }

    // [dihedrals]: i j k l  c0 [c1 .. c5]
    for (const Line& l : sections["dihedrals"]) {
        Cursor c(origin, l.number, l.text);
        DihedralTerm t;
        t.i = c.next_int();
        t.j = c.next_int();
        t.k = c.next_int();
        t.l = c.next_int();
        DihedralParam p;
        int n = 0;
        double v;
        while (c.next_double_opt(v)) {
            if (n >= 6) fail(origin, l.number, "at most 6 dihedral coefficients supported");
            p.c[std::size_t(n++)] = v;
        }
        if (n == 0) fail(origin, l.number, "dihedral needs at least one coefficient");
        check_site(t.i, l.number);
        check_site(t.j, l.number);
        check_site(t.k, l.number);
        check_site(t.l, l.number);
        t.param = static_cast<int>(tmpl.dihedral_params.size());
        tmpl.dihedral_params.push_back(p);
        tmpl.dihedrals.push_back(t);
    }

    // [nonbonded_fg]: type_a type_b sigma epsilon cutoff
    {
        out.fg_lj = LjTable(static_cast<int>(out.fg_type_names.size()));
        for (const Line& l : sections["nonbonded_fg"]) {
            Cursor c(origin, l.number, l.text);
            const std::string a = c.next_word();
            const std::string b = c.next_word();
            LjParams p;
            p.sigma = c.next_double();
            p.epsilon = c.next_double();
            p.cutoff = c.next_double();
            c.expect_end();
            const auto find = [&](const std::string& n) {
                const auto it = std::find(out.fg_type_names.begin(), out.fg_type_names.end(), n);
                if (it == out.fg_type_names.end())
                    fail(origin, l.number, "nonbonded_fg references unknown site type '" + n + "'");
                return static_cast<int>(it - out.fg_type_names.begin());
            };
            if (!p.valid()) fail(origin, l.number, "invalid LJ parameters (need sigma,epsilon > 0, cutoff > sigma)");
            out.fg_lj.set(find(a), find(b), p);
        }
        for (int a = 0; a < out.fg_lj.n_types(); ++a)
            for (int b = a; b < out.fg_lj.n_types(); ++b)
                if (!out.fg_lj.has(a, b))
                    throw ParseError(origin + ": [nonbonded_fg] missing entry for pair " +
                                     out.fg_type_names[std::size_t(a)] + " " +
                                     out.fg_type_names[std::size_t(b)]);
    }

    // [mapping]: bead_type  site indices (single bead covering every site)
    {
        const auto& lines = sections["mapping"];
        if (lines.size() != 1)
            throw ParseError(origin + ": [mapping] must declare exactly one bead per molecule");
        const Line& l = lines.front();
        Cursor c(origin, l.number, l.text);
        const std::string bead = c.next_word();
        std::vector<bool> covered(std::size_t(n_sites), false);
        int idx;
        while (c.next_int_opt(idx)) {
            check_site(idx, l.number);
            if (covered[std::size_t(idx)]) fail(origin, l.number, "site mapped twice");
            covered[std::size_t(idx)] = true;
        }
        if (std::find(covered.begin(), covered.end(), false) != covered.end())
            fail(origin, l.number, "mapping must cover every site of the molecule");
        tmpl.bead_type = intern(out.cg_type_names, bead);
    }

    // [nonbonded_cg]: bead_a bead_b sigma epsilon cutoff
    {
        out.cg_lj = LjTable(static_cast<int>(out.cg_type_names.size()));
        for (const Line& l : sections["nonbonded_cg"]) {
            Cursor c(origin, l.number, l.text);
            const std::string a = c.next_word();
            const std::string b = c.next_word();
            LjParams p;
            p.sigma = c.next_double();
            p.epsilon = c.next_double();
            p.cutoff = c.next_double();
            c.expect_end();
            const auto find = [&](const std::string& n) {
                const auto it = std::find(out.cg_type_names.begin(), out.cg_type_names.end(), n);
                if (it == out.cg_type_names.end())
                    fail(origin, l.number, "nonbonded_cg references unknown bead type '" + n + "'");
                return static_cast<int>(it - out.cg_type_names.begin());
            };
            if (!p.valid()) fail(origin, l.number, "invalid LJ parameters (need sigma,epsilon > 0, cutoff > sigma)");
            out.cg_lj.set(find(a), find(b), p);
        }
        for (int a = 0; a < out.cg_lj.n_types(); ++a)
            for (int b = a; b < out.cg_lj.n_types(); ++b)
                if (!out.cg_lj.has(a, b))
                    throw ParseError(origin + ": [nonbonded_cg] missing entry for pair " +
                                     out.cg_type_names[std::size_t(a)] + " " +
                                     out.cg_type_names[std::size_t(b)]);
    }

    return out;
}

TopologyFile parse_topology_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open topology file: " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_topology_text(buf.str(), path.string());
}

Topology make_topology(const TopologyFile& file, int n_molecules) {
    return Topology(file.tmpl, n_molecules, file.fg_type_names, file.cg_type_names, file.fg_lj,
                    file.cg_lj);
}

} // namespace admd
