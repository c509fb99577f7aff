#include "sphfn/group.hpp"

#include <cmath>
#include <fstream>
#include <istream>
#include <sstream>

namespace sphfn {

GroupRank1 GroupRank1::make(std::string name, int p, int q)
{
    if (p < 1)
        throw DomainError("group '" + name + "': multiplicity p must be >= 1");
    if (q < 0)
        throw DomainError("group '" + name + "': multiplicity q must be >= 0");
    return GroupRank1{std::move(name), p, q};
}

special::HypParams hyp_params(const GroupRank1& g, cplx lam)
{
    double s = g.p + 2.0 * g.q;
    return special::HypParams{(s + 2.0 * lam) / 4.0, (s - 2.0 * lam) / 4.0,
                              cplx((g.p + g.q + 1.0) / 2.0, 0.0)};
}

cplx eigenvalue(const GroupRank1& g, cplx lam, bool normalized)
{
    cplx mu = lam * lam - g.rho0() * g.rho0();
    if (normalized)
        mu /= 2.0 * (g.p + 4.0 * g.q);
    return mu;
}

double jacobian_D(const GroupRank1& g, double t)
{
    if (!(t > 0.0))
        throw DomainError("jacobian_D: t must be > 0");
    return std::exp(-2.0 * g.rho0() * t) * std::pow(std::expm1(2.0 * t), g.p) *
           std::pow(std::expm1(4.0 * t), g.q);
}

double c0_constant(const GroupRank1& g)
{
    int n = g.n();
    if (n < 2)
        throw DomainError("c0_constant: needs n = p+q+1 >= 2");
    double num = special::gamma(cplx((n - 1) / 2.0, 0.0)).real();
    double den = special::gamma(cplx(n / 2.0, 0.0)).real();
    return std::sqrt(M_PI) * std::pow(2.0, g.q / 2.0 - 2.0) * num / den;
}

std::function<bool(cplx)> weyl_fixed_set(WeylElement s)
{
    if (s == WeylElement::identity)
        return [](cplx) { return true; };
    return [](cplx lam) { return lam == cplx(0.0, 0.0); };
}

namespace {

std::string trim(const std::string& s)
{
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos)
        return {};
    auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

int parse_int_field(const std::string& value, const std::string& key, int line_no)
{
    try {
        std::size_t pos = 0;
        int v = std::stoi(value, &pos);
        if (pos != value.size())
            throw std::invalid_argument("trailing characters");
        return v;
    } catch (const std::exception&) {
        throw DomainError("catalog line " + std::to_string(line_no) + ": field '" + key +
                          "' is not an integer: '" + value + "'");
    }
}

} // namespace

std::vector<GroupRank1> parse_catalog(std::istream& in)
{
    std::vector<GroupRank1> out;
    std::string name;
    int p = -1, q = -1;
    bool in_block = false;
    int line_no = 0;

    auto flush = [&]() {
        if (!in_block)
            return;
        if (name.empty() || p < 0 || q < 0)
            throw DomainError("catalog: record ending at line " + std::to_string(line_no) +
                              " must set name, p and q");
        out.push_back(GroupRank1::make(name, p, q));
        name.clear();
        p = q = -1;
        in_block = false;
    };

    std::string line;
    while (std::getline(in, line)) {
        ++line_no;
        auto hash = line.find('#');
        if (hash != std::string::npos)
            line.erase(hash);
        line = trim(line);
        if (line.empty()) {
            flush();
            continue;
        }
        auto eq = line.find('=');
        if (eq == std::string::npos)
            throw DomainError("catalog line " + std::to_string(line_no) +
                              ": expected 'key = value'");
        std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));
        in_block = true;
        if (key == "name")
            name = value;
        else if (key == "p")
            p = parse_int_field(value, key, line_no);
        else if (key == "q")
            q = parse_int_field(value, key, line_no);
        else
            throw DomainError("catalog line " + std::to_string(line_no) + ": unknown key '" +
                              key + "'");
    }
    flush();
    return out;
}

std::vector<GroupRank1> load_catalog_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw DomainError("catalog: cannot open '" + path + "'");
    return parse_catalog(in);
}

} // namespace sphfn
