#include "drg/intersection_array.hpp"

#include "drg/errors.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace drg {

namespace {

std::string strip(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    for (char ch : s)
        if (!std::isspace(static_cast<unsigned char>(ch))) out.push_back(ch);
    return out;
}

std::vector<long long> parse_int_list(const std::string& s, const std::string& what) {
    if (s.empty()) throw ParseError("empty " + what + " list");
    std::vector<long long> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) throw ParseError("empty entry in " + what + " list");
        try {
            size_t pos = 0;
            long long v = std::stoll(tok, &pos);
            if (pos != tok.size()) throw ParseError("");
            out.push_back(v);
        } catch (const std::exception&) {
            throw ParseError("bad integer '" + tok + "' in " + what + " list");
        }
    }
    if (s.back() == ',') throw ParseError("trailing comma in " + what + " list");
    return out;
}

} // namespace

IntersectionArray IntersectionArray::parse(const std::string& text) {
    std::string s = strip(text);
    auto semi = s.find(';');
    if (semi == std::string::npos)
        throw ParseError("intersection array needs 'b_0,..;c_1,..', got '" + text + "'");
    if (s.find(';', semi + 1) != std::string::npos)
        throw ParseError("more than one ';' in intersection array '" + text + "'");
    auto b = parse_int_list(s.substr(0, semi), "b");
    auto c = parse_int_list(s.substr(semi + 1), "c");
    return create(std::move(b), std::move(c));
}

IntersectionArray IntersectionArray::create(std::vector<long long> b, std::vector<long long> c) {
    if (b.empty() || c.empty()) throw ValidationError("intersection array must have D >= 1");
    if (b.size() != c.size())
        throw ValidationError("b sequence has " + std::to_string(b.size()) + " entries but c has " +
                              std::to_string(c.size()) + "; both must have D");

    IntersectionArray arr;
    arr.b_ = std::move(b);
    arr.c_ = std::move(c);
    const int D = arr.diameter();
    const long long k = arr.b_[0];

    if (k < 1) throw ValidationError("degree b_0 must be positive");
    if (arr.c_[0] != 1) throw ValidationError("c_1 must equal 1, got " + std::to_string(arr.c_[0]));
    for (int i = 0; i < D; ++i) {
        if (arr.b_[i] < 1)
            throw ValidationError("b_" + std::to_string(i) + " must be positive, got " +
                                  std::to_string(arr.b_[i]));
        if (arr.c_[i] < 1)
            throw ValidationError("c_" + std::to_string(i + 1) + " must be positive, got " +
                                  std::to_string(arr.c_[i]));
    }
    for (int i = 1; i <= D; ++i) {
        long long ai = k - arr.b(i) - arr.c(i);
        if (ai < 0)
            throw ValidationError("a_" + std::to_string(i) + " = k - b_i - c_i is negative (" +
                                  std::to_string(ai) + "); array infeasible");
    }

    // Shell sizes by the quotient recurrence; each must be a positive integer.
    arr.k_.assign(static_cast<size_t>(D) + 1, BigInt(0));
    arr.k_[0] = 1;
    for (int i = 1; i <= D; ++i) {
        BigInt num = arr.k_[i - 1] * arr.b_[i - 1];
        BigInt ci = arr.c_[i - 1];
        if (num % ci != 0)
            throw ValidationError("shell size k_" + std::to_string(i) +
                                  " is not an integer; array infeasible");
        arr.k_[i] = num / ci;
        if (arr.k_[i] <= 0)
            throw ValidationError("shell size k_" + std::to_string(i) + " is not positive");
    }
    arr.n_ = 0;
    for (const auto& ki : arr.k_) arr.n_ += ki;
    BigInt nk = arr.n_ * k;
    if (nk % 2 != 0)
        throw ValidationError("n*k is odd; handshake count infeasible");
    arr.m_ = nk / 2;

    for (int i = 0; i + 1 < D; ++i)
        if (arr.b_[i] < arr.b_[i + 1]) {
            arr.warnings_.push_back("b sequence increases at i=" + std::to_string(i) +
                                    "; no distance-regular graph does this");
            break;
        }
    for (int i = 0; i + 1 < D; ++i)
        if (arr.c_[i] > arr.c_[i + 1]) {
            arr.warnings_.push_back("c sequence decreases at i=" + std::to_string(i + 1) +
                                    "; no distance-regular graph does this");
            break;
        }

    return arr;
}

long long IntersectionArray::b(int i) const {
    if (i < 0 || i > diameter()) throw ValidationError("b index out of range");
    return i == diameter() ? 0 : b_[i];
}

long long IntersectionArray::c(int i) const {
    if (i < 0 || i > diameter()) throw ValidationError("c index out of range");
    return i == 0 ? 0 : c_[i - 1];
}

long long IntersectionArray::a(int i) const {
    return degree() - b(i) - c(i);
}

BigInt IntersectionArray::shell_boundary(int i) const {
    if (i < 1 || i > diameter()) throw ValidationError("shell boundary index out of range");
    return k_[i] * c(i);
}

bool IntersectionArray::bipartite() const {
    for (int i = 0; i <= diameter(); ++i)
        if (a(i) != 0) return false;
    return true;
}

std::string IntersectionArray::to_string() const {
    std::ostringstream os;
    for (size_t i = 0; i < b_.size(); ++i) os << (i ? "," : "") << b_[i];
    os << ';';
    for (size_t i = 0; i < c_.size(); ++i) os << (i ? "," : "") << c_[i];
    return os.str();
}

FamilySpec FamilySpec::parse(const std::string& text) {
    std::string s = strip(text);
    if (s.empty()) throw ParseError("empty family spec");
    FamilySpec spec;
    auto colon = s.find(':');
    if (colon == std::string::npos) {
        spec.name = s;
    } else {
        spec.name = s.substr(0, colon);
        spec.params = parse_int_list(s.substr(colon + 1), "family parameter");
    }
    std::transform(spec.name.begin(), spec.name.end(), spec.name.begin(),
                   [](unsigned char c) { return std::tolower(c); });
    if (spec.name.empty()) throw ParseError("family spec has no name");
    return spec;
}

std::string FamilySpec::to_string() const {
    std::string s = name;
    for (size_t i = 0; i < params.size(); ++i) s += (i ? "," : ":") + std::to_string(params[i]);
    return s;
}

namespace {

void need_params(const FamilySpec& spec, size_t count) {
    if (spec.params.size() != count)
        throw ValidationError("family '" + spec.name + "' needs " + std::to_string(count) +
                              " parameter(s), got " + std::to_string(spec.params.size()));
}

IntersectionArray make_complete(long long n) {
    if (n < 2) throw ValidationError("complete:n needs n >= 2");
    return IntersectionArray::create({n - 1}, {1});
}

IntersectionArray make_cycle(long long n) {
    if (n < 3) throw ValidationError("cycle:n needs n >= 3");
    int D = static_cast<int>(n / 2);
    std::vector<long long> b(D, 1), c(D, 1);
    b[0] = 2;
    c[D - 1] = (n % 2 == 0) ? 2 : 1;
    return IntersectionArray::create(std::move(b), std::move(c));
}

IntersectionArray make_hamming(long long m, long long q) {
    if (m < 1 || q < 2) throw ValidationError("hamming:m,q needs m >= 1 and q >= 2");
    std::vector<long long> b(m), c(m);
    for (long long i = 0; i < m; ++i) {
        b[i] = (m - i) * (q - 1);
        c[i] = i + 1;
    }
    return IntersectionArray::create(std::move(b), std::move(c));
}

IntersectionArray make_johnson(long long m, long long q) {
    if (q < 1 || 2 * q > m) throw ValidationError("johnson:m,q needs 1 <= q and 2q <= m");
    std::vector<long long> b(q), c(q);
    for (long long i = 0; i < q; ++i) {
        b[i] = (q - i) * (m - q - i);
        c[i] = (i + 1) * (i + 1);
    }
    return IntersectionArray::create(std::move(b), std::move(c));
}

IntersectionArray make_odd(long long m) {
    if (m < 2) throw ValidationError("odd:m needs m >= 2");
    int D = static_cast<int>(m - 1);
    std::vector<long long> b(D), c(D);
    b[0] = m;
    for (int i = 1; i < D; ++i) b[i] = m - (i + 1) / 2;
    for (int i = 1; i <= D; ++i) c[i - 1] = (i + 1) / 2;
    return IntersectionArray::create(std::move(b), std::move(c));
}

} // namespace

IntersectionArray generate_family(const FamilySpec& spec) {
    const std::string& f = spec.name;
    if (f == "complete") {
        need_params(spec, 1);
        return make_complete(spec.params[0]);
    }
    if (f == "cycle") {
        need_params(spec, 1);
        return make_cycle(spec.params[0]);
    }
    if (f == "hamming") {
        need_params(spec, 2);
        return make_hamming(spec.params[0], spec.params[1]);
    }
    if (f == "johnson") {
        need_params(spec, 2);
        return make_johnson(spec.params[0], spec.params[1]);
    }
    if (f == "odd") {
        need_params(spec, 1);
        return make_odd(spec.params[0]);
    }
    if (f == "petersen") {
        need_params(spec, 0);
        return IntersectionArray::create({3, 2}, {1, 1});
    }
    if (f == "dodecahedron") {
        need_params(spec, 0);
        return IntersectionArray::create({3, 2, 1, 1, 1}, {1, 1, 1, 2, 3});
    }
    if (f == "biggs-smith") {
        need_params(spec, 0);
        return IntersectionArray::create({3, 2, 2, 2, 1, 1, 1}, {1, 1, 1, 1, 1, 1, 3});
    }
    if (f == "grassmann")
        throw ValidationError("family 'grassmann' is out of scope for this tool; supported: "
                              "complete, cycle, hamming, johnson, odd, petersen, dodecahedron, "
                              "biggs-smith");
    throw ValidationError("unknown family '" + f + "'; supported: complete, cycle, hamming, "
                          "johnson, odd, petersen, dodecahedron, biggs-smith");
}

} // namespace drg
