#include "autoseq/multidim.hpp"

#include <map>
#include <sstream>
#include <stdexcept>

#include "autoseq/parallel.hpp"

namespace autoseq {

Block2D Block2D::top_left(std::size_t s) const {
    if (s > side) throw std::invalid_argument("top_left larger than block");
    Block2D out(s);
    for (std::size_t m = 0; m < s; ++m)
        for (std::size_t n = 0; n < s; ++n) out.at(m, n) = at(m, n);
    return out;
}

std::string Block2D::to_csv() const {
    std::ostringstream os;
    for (std::size_t m = 0; m < side; ++m) {
        for (std::size_t n = 0; n < side; ++n) os << (n ? "," : "") << at(m, n);
        os << '\n';
    }
    return os.str();
}

std::string Block2D::to_pgm(std::uint32_t max_value) const {
    if (max_value == 0) max_value = 1;
    std::ostringstream os;
    os << "P2\n" << side << ' ' << side << '\n' << max_value << '\n';
    for (std::size_t m = 0; m < side; ++m) {
        for (std::size_t n = 0; n < side; ++n) os << (n ? " " : "") << std::min(at(m, n), max_value);
        os << '\n';
    }
    return os.str();
}

void Morphism2D::validate() const {
    if (k < 2) throw std::invalid_argument("2-D morphism side must be >= 2");
    for (auto& im : images) {
        if (im.size() != std::size_t(k) * k) throw std::invalid_argument("all images must be k x k");
        for (auto x : im)
            if (x >= images.size()) throw std::invalid_argument("image letter outside the alphabet");
    }
}

Morphism2D Morphism2D::x_pattern() {
    Morphism2D m;
    m.k = 3;
    m.images = {{0, 0, 0, 0, 0, 0, 0, 0, 0}, {1, 0, 1, 0, 1, 0, 1, 0, 1}};
    return m;
}

Morphism2D Morphism2D::sierpinski() {
    Morphism2D m;
    m.k = 2;
    m.images = {{0, 0, 0, 0}, {1, 1, 1, 0}};
    return m;
}

Block2D fixed_block(const Morphism2D& m2, std::uint32_t seed, unsigned depth) {
    m2.validate();
    if (seed >= m2.letters()) throw std::invalid_argument("seed outside the alphabet");
    if (m2.image(seed, 0, 0) != seed) throw std::domain_error("non-prolongable seed");
    Block2D b(1, seed);
    for (unsigned d = 0; d < depth; ++d) {
        Block2D nb(b.side * m2.k);
        for (std::size_t i = 0; i < b.side; ++i)
            for (std::size_t j = 0; j < b.side; ++j)
                for (unsigned r = 0; r < m2.k; ++r)
                    for (unsigned c = 0; c < m2.k; ++c) nb.at(i * m2.k + r, j * m2.k + c) = m2.image(b.at(i, j), r, c);
        b = std::move(nb);
    }
    return b;
}

Block2D pascal_mod(unsigned d, std::size_t size) {
    if (d < 2) throw std::invalid_argument("modulus must be >= 2");
    Block2D b(size);
    for (std::size_t m = 0; m < size; ++m) {
        b.at(m, 0) = 1 % d;
        for (std::size_t n = 1; n <= m && n < size; ++n) b.at(m, n) = (b.at(m - 1, n - 1) + b.at(m - 1, n)) % d;
    }
    return b;
}

bool selfsimilarity_check(const Block2D& b, const Morphism2D& m2) {
    m2.validate();
    if (b.side % m2.k != 0) throw std::invalid_argument("block side is not a multiple of the morphism side");
    const std::size_t parents = b.side / m2.k;
    std::vector<char> ok(parents, 1);
    parallel_for(parents, [&](std::size_t i) {
        for (std::size_t j = 0; j < parents && ok[i]; ++j) {
            auto a = b.at(i, j);
            if (a >= m2.letters()) {
                ok[i] = 0;
                break;
            }
            for (unsigned r = 0; r < m2.k; ++r)
                for (unsigned c = 0; c < m2.k; ++c)
                    if (b.at(i * m2.k + r, j * m2.k + c) != m2.image(a, r, c)) ok[i] = 0;
        }
    });
    for (char c : ok)
        if (!c) return false;
    return true;
}

Morphism2D infer_morphism(const Block2D& b, unsigned k, unsigned letters) {
    Morphism2D m;
    m.k = k;
    m.images.assign(letters, std::vector<std::uint32_t>(std::size_t(k) * k, 0));
    std::vector<bool> seen(letters, false);
    const std::size_t parents = b.side / k;
    for (std::size_t i = 0; i < parents; ++i)
        for (std::size_t j = 0; j < parents; ++j) {
            auto a = b.at(i, j);
            if (a >= letters || seen[a]) continue;
            seen[a] = true;
            for (unsigned r = 0; r < k; ++r)
                for (unsigned c = 0; c < k; ++c) m.images[a][r * k + c] = b.at(i * k + r, j * k + c) % letters;
        }
    return m;
}

std::uint32_t KernelSubstitution::eval(std::uint64_t m, std::uint64_t n) const {
    if (!closed) throw std::domain_error("kernel substitution is not closed");
    std::size_t s = 0;
    while (m || n) {
        s = on_states.image(static_cast<std::uint32_t>(s), static_cast<unsigned>(m % p), static_cast<unsigned>(n % p));
        m /= p;
        n /= p;
    }
    return coding[s];
}

Block2D KernelSubstitution::generate(std::size_t size) const {
    Block2D b(size);
    parallel_for(size, [&](std::size_t m) {
        for (std::size_t n = 0; n < size; ++n) b.at(m, n) = eval(m, n);
    });
    return b;
}

KernelSubstitution kernel_substitution(const Block2D& b, unsigned p, std::size_t window) {
    if (p < 2) throw std::invalid_argument("p must be >= 2");
    if (window == 0 || window > b.side) throw std::invalid_argument("bad window");
    struct Elem { std::size_t scale, r, s; };
    auto signature = [&](const Elem& e) {
        std::vector<std::uint32_t> sig;
        sig.reserve(window * window);
        for (std::size_t m = 0; m < window; ++m)
            for (std::size_t n = 0; n < window; ++n) sig.push_back(b.at(e.scale * m + e.r, e.scale * n + e.s));
        return sig;
    };
    // an element at scale p^e is identifiable when its window fits in the grid
    auto fits = [&](std::size_t scale) { return scale * window <= b.side; };

    KernelSubstitution ks;
    ks.p = p;
    ks.on_states.k = p;
    std::map<std::vector<std::uint32_t>, std::uint32_t> ids;
    std::vector<Elem> elems{{1, 0, 0}};
    ids[signature(elems[0])] = 0;
    ks.closed = true;
    for (std::size_t i = 0; i < elems.size(); ++i) {
        Elem e = elems[i];
        std::vector<std::uint32_t> img(std::size_t(p) * p);
        const std::size_t child_scale = e.scale * p;
        if (!fits(child_scale)) {
            ks.closed = false;
            break;
        }
        for (unsigned r = 0; r < p; ++r)
            for (unsigned c = 0; c < p; ++c) {
                Elem ch{child_scale, e.r + e.scale * r, e.s + e.scale * c};
                auto sig = signature(ch);
                auto it = ids.find(sig);
                if (it == ids.end()) {
                    it = ids.emplace(std::move(sig), static_cast<std::uint32_t>(elems.size())).first;
                    elems.push_back(ch);
                }
                img[r * p + c] = it->second;
            }
        ks.on_states.images.push_back(std::move(img));
    }
    for (auto& e : elems) ks.coding.push_back(b.at(e.r, e.s));
    if (!ks.closed) ks.on_states.images.clear();
    return ks;
}

unsigned smallest_prime_factor(unsigned d) {
    if (d < 2) throw std::invalid_argument("d must be >= 2");
    for (unsigned f = 2; f * f <= d; ++f)
        if (d % f == 0) return f;
    return d;
}

ConsistencyReport pascal_consistency(unsigned d, unsigned p, std::size_t check, std::size_t grid) {
    if (grid == 0) {
        grid = 1;
        while (grid < 243) grid *= p;
    }
    ConsistencyReport rep;
    rep.d = d;
    rep.p = p;
    auto ks = kernel_substitution(pascal_mod(d, grid), p);
    rep.closed = ks.closed;
    rep.states = ks.states();
    if (ks.closed) rep.regenerates = ks.generate(check) == pascal_mod(d, check);
    return rep;
}

}  // namespace autoseq
