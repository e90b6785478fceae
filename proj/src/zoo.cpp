#include "grw/zoo.hpp"

#include <random>
#include <stdexcept>

namespace grw {

namespace {
const char* family_name(Family f) {
    switch (f) {
        case Family::Gabidulin: return "gabidulin";
        case Family::Repetition: return "repetition";
        case Family::Full: return "full";
        case Family::Coordinate: return "coordinate";
        case Family::Random: return "random";
    }
    throw std::logic_error("unreachable");
}
}  // namespace

std::string CodeDescriptor::to_string() const {
    std::string s = std::string(family_name(family)) + ":n=" + std::to_string(n);
    if (family == Family::Gabidulin || family == Family::Coordinate ||
        family == Family::Random)
        s += ",k=" + std::to_string(k);
    if (family == Family::Random) s += ",seed=" + std::to_string(seed);
    return s;
}

CodeDescriptor parse_descriptor(const std::string& text) {
    auto colon = text.find(':');
    if (colon == std::string::npos)
        throw std::invalid_argument("descriptor needs the form family:key=value,...");
    std::string fam = text.substr(0, colon);
    CodeDescriptor d;
    if (fam == "gabidulin") d.family = Family::Gabidulin;
    else if (fam == "repetition") d.family = Family::Repetition;
    else if (fam == "full") d.family = Family::Full;
    else if (fam == "coordinate") d.family = Family::Coordinate;
    else if (fam == "random") d.family = Family::Random;
    else throw std::invalid_argument("unknown code family '" + fam + "'");

    bool saw_n = false, saw_k = false, saw_seed = false;
    std::string rest = text.substr(colon + 1);
    std::size_t pos = 0;
    while (pos < rest.size()) {
        auto comma = rest.find(',', pos);
        if (comma == std::string::npos) comma = rest.size();
        std::string item = rest.substr(pos, comma - pos);
        pos = comma + 1;
        auto eq = item.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("descriptor item '" + item + "' is not key=value");
        std::string key = item.substr(0, eq), val = item.substr(eq + 1);
        std::uint64_t num;
        try {
            std::size_t used = 0;
            num = std::stoull(val, &used);
            if (used != val.size()) throw std::invalid_argument(val);
        } catch (const std::exception&) {
            throw std::invalid_argument("descriptor value '" + val + "' is not a number");
        }
        if (key == "n" && !saw_n) {
            d.n = static_cast<std::uint32_t>(num);
            saw_n = true;
        } else if (key == "k" && !saw_k) {
            d.k = static_cast<std::uint32_t>(num);
            saw_k = true;
        } else if (key == "seed" && !saw_seed && d.family == Family::Random) {
            d.seed = num;
            saw_seed = true;
        } else {
            throw std::invalid_argument("unexpected descriptor key '" + key + "'");
        }
    }
    if (!saw_n) throw std::invalid_argument("descriptor is missing n");
    switch (d.family) {
        case Family::Repetition:
            if (saw_k && d.k != 1)
                throw std::invalid_argument("repetition codes have k=1");
            d.k = 1;
            break;
        case Family::Full:
            if (saw_k && d.k != d.n)
                throw std::invalid_argument("the full code has k=n");
            d.k = d.n;
            break;
        case Family::Gabidulin:
        case Family::Coordinate:
            if (!saw_k) throw std::invalid_argument("descriptor is missing k");
            break;
        case Family::Random:
            if (!saw_k) throw std::invalid_argument("descriptor is missing k");
            if (!saw_seed) throw std::invalid_argument("descriptor is missing seed");
            break;
    }
    return d;
}

LinearCode gabidulin_code(TowerPtr tower, std::uint32_t n, std::uint32_t k) {
    if (n > tower->m())
        throw std::invalid_argument("evaluation points run out: n=" + std::to_string(n) +
                                    " exceeds m=" + std::to_string(tower->m()));
    if (k < 1 || k > n) throw std::invalid_argument("need 1 <= k <= n");
    Mat G(k, n);
    for (std::uint32_t j = 0; j < n; ++j) {
        FE g = j == 0 ? FE(1) : tower->pow(static_cast<FE>(tower->q()), j);
        for (std::uint32_t i = 0; i < k; ++i) {
            G.at(i, j) = g;
            g = tower->frobenius(g);
        }
    }
    return make_code(std::move(tower), G);
}

LinearCode random_code(TowerPtr tower, std::uint32_t n, std::uint32_t k, std::uint64_t seed) {
    if (k < 1 || k > n) throw std::invalid_argument("need 1 <= k <= n");
    std::mt19937_64 rng(seed);
    for (int attempt = 0; attempt < 10000; ++attempt) {
        Mat G(k, n);
        for (auto& v : G.a) v = static_cast<FE>(rng() % tower->order());
        if (rank(*tower, G) == k) return make_code(std::move(tower), G);
    }
    throw std::runtime_error("could not draw an independent generator in 10^4 tries");
}

LinearCode named_code(TowerPtr tower, Family family, std::uint32_t n, std::uint32_t k) {
    switch (family) {
        case Family::Repetition: {
            if (k != 1) throw std::invalid_argument("repetition codes have k=1");
            Mat G(1, n);
            for (std::uint32_t j = 0; j < n; ++j) G.at(0, j) = 1;
            return make_code(std::move(tower), G);
        }
        case Family::Full:
            if (k != n) throw std::invalid_argument("the full code has k=n");
            return make_code(std::move(tower), Mat::identity(n));
        case Family::Coordinate: {
            if (k < 1 || k > n) throw std::invalid_argument("need 1 <= k <= n");
            Mat G(k, n);
            for (std::uint32_t i = 0; i < k; ++i) G.at(i, i) = 1;
            return make_code(std::move(tower), G);
        }
        default:
            throw std::invalid_argument("family carries parameters of its own; use the dedicated builder");
    }
}

LinearCode code_from_descriptor(TowerPtr tower, const CodeDescriptor& d) {
    switch (d.family) {
        case Family::Gabidulin: return gabidulin_code(std::move(tower), d.n, d.k);
        case Family::Random: return random_code(std::move(tower), d.n, d.k, d.seed);
        default: return named_code(std::move(tower), d.family, d.n, d.k);
    }
}

}  // namespace grw
