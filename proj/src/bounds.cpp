#include "rainbow/bounds.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <sstream>

#include "rainbow/error.hpp"

namespace rainbow {

long long floor_of(const Rational& x)
{
    const long long a = x.numerator(), b = x.denominator(); // b > 0
    return a >= 0 ? a / b : -((-a + b - 1) / b);
}

long long ceil_of(const Rational& x) { return -floor_of(-x); }

std::string to_string(const Rational& x)
{
    if (x.denominator() == 1)
        return std::to_string(x.numerator());
    return std::to_string(x.numerator()) + "/" + std::to_string(x.denominator());
}

namespace {

using R = Rational;

[[noreturn]] void out_of_range(std::string_view tag, const std::string& why)
{
    throw Error(ErrorCode::OutOfRange, std::string(tag) + ": " + why);
}

void require(bool ok, std::string_view tag, const std::string& why)
{
    if (!ok)
        out_of_range(tag, why);
}

std::string cycle(int k) { return "C" + std::to_string(k); }
std::string path(int k) { return "P" + std::to_string(k); }

struct Spec {
    std::string source;
    std::function<void(BoundRecord&)> eval;
};

const std::map<std::string, Spec, std::less<>>& registry()
{
    static const std::map<std::string, Spec, std::less<>> specs = [] {
        std::map<std::string, Spec, std::less<>> s;

        s["c3-exact"] = {"triangle value", [](BoundRecord& b) {
                             const int n = b.params.n;
                             require(n >= 4, b.tag, "needs n >= 4");
                             b.family = cycle(3);
                             b.lower = b.upper = R(floor_of(R(3 * n - 6, 2)));
                         }};
        s["c4-upper"] = {"prior C4 upper bound", [](BoundRecord& b) {
                             require(b.params.n >= 4, b.tag, "needs n >= 4");
                             b.family = cycle(4);
                             b.upper = R(2 * (b.params.n - 2));
                         }};
        s["c4-lower"] = {"prior C4 lower bound", [](BoundRecord& b) {
                             const int n = b.params.n;
                             require(n >= 42, b.tag, "needs n >= 42");
                             b.family = cycle(4);
                             b.r = (n - 2) % 20;
                             b.lower = R(9 * (n - 2) - 4 * *b.r, 5);
                         }};
        s["c5-upper-prior"] = {"prior C5 upper bound", [](BoundRecord& b) {
                                   require(b.params.n >= 5, b.tag, "needs n >= 5");
                                   b.family = cycle(5);
                                   b.upper = R(5 * (b.params.n - 2), 2);
                               }};
        s["c5-lower-prior"] = {"prior C5 lower bound", [](BoundRecord& b) {
                                   const int n = b.params.n;
                                   require(n >= 20, b.tag, "needs n >= 20");
                                   b.family = cycle(5);
                                   b.r = (n - 2) % 18;
                                   b.lower = R(19 * (n - 2) - 10 * *b.r, 9);
                               }};
        s["ck-lower-prior"] = {"prior C_k lower bound", [](BoundRecord& b) {
                                   const int n = b.params.n, k = b.params.k;
                                   require(k >= 6 && k <= n, b.tag, "needs 6 <= k <= n");
                                   b.family = cycle(k);
                                   b.lower = R(3 * n - 6) * R(k - 3, k - 2) - R(2 * k - 7, k - 2);
                               }};

        s["ex-c3"] = {"planar Turan number of C3", [](BoundRecord& b) {
                          require(b.params.n >= 3, b.tag, "needs n >= 3");
                          b.family = cycle(3);
                          b.quantity = "ex";
                          b.lower = b.upper = R(2 * b.params.n - 4);
                      }};
        s["ex-c4"] = {"planar Turan bound for C4", [](BoundRecord& b) {
                          require(b.params.n >= 4, b.tag, "needs n >= 4");
                          b.family = cycle(4);
                          b.quantity = "ex";
                          b.upper = R(15 * (b.params.n - 2), 7);
                      }};
        s["ex-c5"] = {"planar Turan bound for C5", [](BoundRecord& b) {
                          require(b.params.n >= 11, b.tag, "needs n >= 11");
                          b.family = cycle(5);
                          b.quantity = "ex";
                          b.upper = R(12 * b.params.n - 33, 5);
                      }};
        s["ex-c6"] = {"planar Turan bound for C6", [](BoundRecord& b) {
                          require(b.params.n >= 6, b.tag, "needs n >= 6");
                          b.family = cycle(6);
                          b.quantity = "ex";
                          b.upper = R(18 * (b.params.n - 2), 7);
                      }};

        s["p89-lower"] = {"join-host path construction", [](BoundRecord& b) {
                              const int n = b.params.n, k = b.params.k;
                              require(k == 8 || k == 9, b.tag, "needs k in {8, 9}");
                              require(n >= k, b.tag, "needs n >= k");
                              const int eps = k % 2, eps_star = (n + 1 + eps) % 2;
                              b.family = path(k);
                              b.lower = R(3 * n + 3 * eps - eps_star - 3, 2);
                          }};
        auto pk_range = [](BoundRecord& b, int which) {
            const int n = b.params.n, k = b.params.k;
            require(k >= 10 && n >= k, b.tag, "needs n >= k >= 10");
            const int h = k / 2, eps = k % 2;
            const bool ok = which == 0   ? n < 3 * h + eps - 5
                            : which == 1 ? (n >= 3 * h + eps - 5 && n <= 5 * h + eps - 15)
                                         : n > 5 * h + eps - 15;
            require(ok, b.tag, "n outside this range of the construction");
            b.family = path(k);
        };
        s["pk-small-lower"] = {"apex-path stellation, small n", [pk_range](BoundRecord& b) {
                                   pk_range(b, 0);
                                   b.lower = R(b.params.n + 2 * b.params.k - 12);
                               }};
        s["pk-mid-lower"] = {"apex-path stellation, middle n", [pk_range](BoundRecord& b) {
                                 pk_range(b, 1);
                                 const int n = b.params.n, k = b.params.k;
                                 b.lower = R(3 * n + 9 * (k / 2) + 3 * (k % 2) - 43, 2);
                             }};
        s["pk-mid-construction"] = {"apex-path stellation, middle n, exact count", [pk_range](BoundRecord& b) {
                                        pk_range(b, 1);
                                        const int n = b.params.n, k = b.params.k;
                                        const int eps = k % 2, eps_star = (n + k / 2 + eps) % 2;
                                        b.lower = R(3 * n + 9 * (k / 2) + 3 * eps - 42 - eps_star, 2);
                                    }};
        s["pk-large-lower"] = {"matching host, large n", [pk_range](BoundRecord& b) {
                                   pk_range(b, 2);
                                   b.lower = R(2 * b.params.n + b.params.k - 14);
                               }};
        s["pk-large-construction"] = {"matching host, large n, exact count", [pk_range](BoundRecord& b) {
                                          pk_range(b, 2);
                                          const int n = b.params.n, k = b.params.k;
                                          const int r = (n - k + 7) % 3;
                                          const int eps_prime = r == 1 ? 1 : 0;
                                          const int half = r / 2;
                                          b.r = r;
                                          b.lower = R(2 * n + k - 13 - eps_prime + half / 2 - (half + 1) / 2);
                                      }};

        s["c5-stellation-lower"] = {"C5-free host stellation", [](BoundRecord& b) {
                                        const int n = b.params.n;
                                        require(n >= 119, b.tag, "needs n >= 119");
                                        b.family = cycle(5);
                                        b.r = (n + 7) % 18;
                                        b.lower = R(39 * n - 123 - 21 * *b.r, 18);
                                    }};
        s["c5-sandwich"] = {"C5 stellation lower with Turan upper", [](BoundRecord& b) {
                                const int n = b.params.n;
                                require(n >= 119, b.tag, "needs n >= 119");
                                b.family = cycle(5);
                                b.r = (n + 7) % 18;
                                b.lower = R(39 * n - 123 - 21 * *b.r, 18);
                                b.upper = R(12 * n - 33, 5);
                            }};
        s["ck-subdivision-lower"] = {"subdivision and replacement", [](BoundRecord& b) {
                                         const long long n = b.params.n, k = b.params.k;
                                         require(k >= 5, b.tag, "needs k >= 5");
                                         require(n >= k * k - k, b.tag, "needs n >= k^2-k");
                                         const long long mod = k * k - k - 2;
                                         b.family = cycle(static_cast<int>(k));
                                         b.r = static_cast<int>((n - 2) % mod);
                                         const R coef = R(k - 3, k - 2) + R(2, 3 * (k + 1) * (k - 2));
                                         b.lower = coef * R(3 * n - 6) - R(2 * k * k - 5 * k - 5, mod) * R(*b.r);
                                     }};
        s["ck-subdivision-construction"] = {"subdivision and replacement, exact count", [](BoundRecord& b) {
                                                const long long n = b.params.n, k = b.params.k;
                                                require(k >= 5, b.tag, "needs k >= 5");
                                                require(n >= k * k - k, b.tag, "needs n >= k^2-k");
                                                const long long mod = k * k - k - 2;
                                                b.family = cycle(static_cast<int>(k));
                                                b.r = static_cast<int>((n - 2) % mod);
                                                const long long t = (n - 2 - *b.r) / mod + 2;
                                                b.lower = R((3 * k * k - 6 * k - 7) * (t - 2) + *b.r);
                                            }};
        s["c6-palette-upper"] = {"palette counting for C6", [](BoundRecord& b) {
                                     require(b.params.n >= 8, b.tag, "needs n >= 8");
                                     b.family = cycle(6);
                                     b.upper = R(17 * (b.params.n - 2), 6);
                                 }};
        s["c7-palette-upper"] = {"palette counting for C7", [](BoundRecord& b) {
                                     require(b.params.n >= 13, b.tag, "needs n >= 13");
                                     b.family = cycle(7);
                                     b.upper = R(59 * b.params.n - 113, 20);
                                 }};
        s["c6-sandwich"] = {"C6 subdivision lower with Turan upper", [](BoundRecord& b) {
                                const int n = b.params.n;
                                require(n >= 30, b.tag, "needs n >= 30");
                                b.family = cycle(6);
                                b.r = (n - 2) % 28;
                                b.lower = R(65 * (n - 2), 28) - R(37 * *b.r, 28);
                                b.upper = R(72 * (n - 2), 28);
                            }};

        auto wheel_family = [](BoundRecord& b) {
            b.family = "W" + std::to_string(b.params.q) + "," + cycle(b.params.k);
        };
        s["wheel-ck"] = {"wheel colouring bounds", [wheel_family](BoundRecord& b) {
                             const int q = b.params.q, k = b.params.k;
                             require(k >= 5 && q >= k - 1, b.tag, "needs k >= 5 and q >= k-1");
                             wheel_family(b);
                             b.lower = R(floor_of(R((2 * k - 7) * q, k - 3)));
                             b.upper = R(floor_of(R((2 * k - 5) * q, k - 2)));
                         }};
        s["wheel-c6-exact"] = {"wheel value for C6", [wheel_family](BoundRecord& b) {
                                   const int q = b.params.q;
                                   require(q >= 5, b.tag, "needs q >= 5");
                                   b.params.k = 6;
                                   wheel_family(b);
                                   b.lower = b.upper = R(floor_of(R(5 * q, 3)));
                               }};
        s["wheel-ck-corollary"] = {"wheel corollary as printed", [wheel_family](BoundRecord& b) {
                                       const int q = b.params.q, k = b.params.k;
                                       require(k >= 5 && q >= k - 1, b.tag, "needs k >= 5 and q >= k-1");
                                       bool covered = false;
                                       for (int t = 1; t <= k - 4; ++t)
                                           covered = covered || (q >= t * (k - 2) && q <= t * (k - 2) + k - 4 - t);
                                       require(covered, b.tag, "q outside the corollary's windows");
                                       wheel_family(b);
                                       b.lower = b.upper = R(2 * q - q / (k - 3));
                                   }};
        return s;
    }();
    return specs;
}

} // namespace

const std::vector<std::string>& bound_tags()
{
    static const std::vector<std::string> tags = [] {
        std::vector<std::string> out;
        for (const auto& [tag, spec] : registry())
            out.push_back(tag);
        return out;
    }();
    return tags;
}

BoundRecord eval_bound(std::string_view tag, const BoundParams& params)
{
    const auto& reg = registry();
    const auto it = reg.find(tag);
    if (it == reg.end())
        throw Error(ErrorCode::InvalidParam, "unknown bound '" + std::string(tag) + "'");
    BoundRecord b;
    b.tag = std::string(tag);
    b.params = params;
    b.source = it->second.source;
    it->second.eval(b);
    return b;
}

bool in_range(std::string_view tag, const BoundParams& params)
{
    try {
        eval_bound(tag, params);
        return true;
    } catch (const Error& e) {
        if (e.code() == ErrorCode::OutOfRange)
            return false;
        throw;
    }
}

ConsistencyReport consistency_report(const ConsistencyGrid& grid)
{
    ConsistencyReport rep;
    auto compare_le = [&](const BoundRecord& lo, const BoundRecord& hi, const std::string& what) {
        ++rep.comparisons;
        if (*lo.lower > *hi.upper)
            rep.violations.push_back({what, lo, hi});
    };
    auto compare_eq = [&](const BoundRecord& a, const BoundRecord& b, const std::string& what) {
        ++rep.comparisons;
        if (*a.lower != *b.lower)
            rep.violations.push_back({what, a, b});
    };

    for (int k : grid.cycle_lengths)
        for (int n = grid.n_min; n <= grid.n_max; ++n) {
            const BoundParams p{n, k, 0};
            std::vector<BoundRecord> here;
            for (const auto& tag : bound_tags()) {
                if (tag.rfind("wheel", 0) == 0)
                    continue;
                if (!in_range(tag, p))
                    continue;
                auto rec = eval_bound(tag, p);
                if (rec.family != cycle(k))
                    continue;
                here.push_back(rec);
            }
            const std::string at = cycle(k) + " n=" + std::to_string(n);
            for (const auto& lo : here) {
                if (!lo.lower || lo.quantity != "ar")
                    continue;
                ++rep.comparisons;
                if (*lo.lower >= R(3 * n - 6))
                    rep.violations.push_back({at + ": lower bound reaches 3n-6", lo, lo});
                for (const auto& hi : here)
                    if (hi.upper)
                        compare_le(lo, hi, at + ": " + lo.tag + " lower exceeds " + hi.tag + " upper");
            }
            for (const auto& hi : here)
                if (hi.upper && hi.quantity == "ar") {
                    ++rep.comparisons;
                    if (*hi.upper >= R(3 * n - 6))
                        rep.violations.push_back({at + ": upper bound not below 3n-6", hi, hi});
                }
            auto find = [&](std::string_view tag) -> const BoundRecord* {
                for (const auto& r : here)
                    if (r.tag == tag)
                        return &r;
                return nullptr;
            };
            if (const auto* a = find("ck-subdivision-lower")) {
                if (const auto* b = find("ck-subdivision-construction"))
                    compare_eq(*a, *b, at + ": subdivision bound differs from its construction count");
                if (k == 6)
                    if (const auto* b = find("c6-sandwich"))
                        compare_eq(*a, *b, at + ": subdivision bound differs from the C6 sandwich lower");
                if (k == 5)
                    if (const auto* b = find("c5-lower-prior"))
                        compare_eq(*a, *b, at + ": subdivision bound differs from the prior C5 lower");
            }
            rep.records.insert(rep.records.end(), here.begin(), here.end());
        }

    if (grid.wheel_corollary)
        for (int k = 5; k <= 9; ++k)
            for (int q = k - 1; q <= grid.wheel_q_max; ++q) {
                const BoundParams p{0, k, q};
                const auto general = eval_bound("wheel-ck", p);
                compare_le(general, general, general.family + ": wheel lower exceeds wheel upper");
                if (!in_range("wheel-ck-corollary", p))
                    continue;
                const auto cor = eval_bound("wheel-ck-corollary", p);
                compare_le(cor, general, general.family + ": corollary value exceeds wheel upper bound");
                compare_le(general, cor, general.family + ": wheel lower bound exceeds corollary value");
                rep.records.push_back(cor);
            }
    return rep;
}

namespace {

std::string params_text(const BoundRecord& b)
{
    std::ostringstream out;
    const char* sep = "";
    if (b.params.n > 0) {
        out << "n=" << b.params.n;
        sep = " ";
    }
    if (b.params.k > 0) {
        out << sep << "k=" << b.params.k;
        sep = " ";
    }
    if (b.params.q > 0) {
        out << sep << "q=" << b.params.q;
        sep = " ";
    }
    if (b.r)
        out << sep << "r=" << *b.r;
    return out.str();
}

std::string value_text(const std::optional<Rational>& v) { return v ? to_string(*v) : "-"; }

std::string csv_field(const std::string& s)
{
    if (s.find_first_of(",\"") == std::string::npos)
        return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"')
            out += '"';
        out += c;
    }
    return out + "\"";
}

} // namespace

std::string format_table(const std::vector<BoundRecord>& records, TableFormat format)
{
    std::vector<std::array<std::string, 5>> rows;
    rows.push_back({"family", "params", "lower", "upper", "source"});
    for (const auto& b : records) {
        const std::string family = b.quantity == "ex" ? "ex:" + b.family : b.family;
        rows.push_back({family, params_text(b), value_text(b.lower), value_text(b.upper), b.tag});
    }
    std::ostringstream out;
    if (format == TableFormat::Csv) {
        for (const auto& row : rows) {
            for (size_t i = 0; i < row.size(); ++i)
                out << (i ? "," : "") << csv_field(row[i]);
            out << '\n';
        }
        return out.str();
    }
    std::array<size_t, 5> width{};
    for (const auto& row : rows)
        for (size_t i = 0; i < row.size(); ++i)
            width[i] = std::max(width[i], row[i].size());
    for (const auto& row : rows) {
        std::string line;
        for (size_t i = 0; i < row.size(); ++i) {
            std::string cell = row[i];
            if (i + 1 < row.size())
                cell.resize(width[i] + 2, ' ');
            line += cell;
        }
        out << line << '\n';
    }
    return out.str();
}

} // namespace rainbow
