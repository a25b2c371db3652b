#include "nichols/cache.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "nichols/algebra.hpp"

namespace nichols {

namespace {
constexpr const char* kMagic = "nicholslayers v1";

std::string sparse_text(const SparseVec& v) {
    std::ostringstream os;
    bool first = true;
    for (const auto& [i, s] : v) {
        if (!first)
            os << ";";
        first = false;
        os << i << ":" << s.tuple();
    }
    return os.str();
}

SparseVec sparse_parse(Field f, const std::string& text) {
    SparseVec v;
    if (trim(text).empty())
        return v;
    for (const auto& part : split(text, ';')) {
        auto colon = part.find(':');
        check(colon != std::string::npos, "cache: malformed sparse entry");
        int idx = std::stoi(part.substr(0, colon));
        v.emplace_back(idx, Scalar::from_tuple(f, part.substr(colon + 1)));
    }
    return v;
}
}  // namespace

struct CacheIO {
    static void store(const Algebra& A, const std::string& path) {
        std::string tmp = path + ".tmp";
        {
            std::ofstream os(tmp);
            check(os.good(), "cache: cannot write " + tmp);
            os << kMagic << "\n";
            os << "field " << A.field()->characteristic() << " " << A.field()->zeta_order() << "\n";
            os << "braiding " << A.b_.content_hash() << "\n";
            os << "complete " << (A.complete_ ? 1 : 0) << "\n";
            os << "layers " << A.layers_.size() << "\n";
            for (size_t n = 1; n < A.layers_.size(); ++n) {
                const Layer& l = A.layers_[n];
                os << "layer " << l.degree << " " << l.dim() << "\n";
                for (auto [x, i] : l.words)
                    os << "w " << x << " " << i << "\n";
                for (const auto& row : l.red)
                    os << "r " << sparse_text(row) << "\n";
                for (const auto& dy : l.der)
                    for (const auto& col : dy)
                        os << "d " << sparse_text(col) << "\n";
            }
            os << "end\n";
            check(os.good(), "cache: write failure on " + tmp);
        }
        std::filesystem::rename(tmp, path);
    }

    static bool load(Algebra& A, const std::string& path) {
        std::ifstream is(path);
        if (!is.good())
            return false;
        Field f = A.field();
        std::string line;
        auto next = [&](const char* what) {
            check(bool(std::getline(is, line)), std::string("cache: truncated at ") + what);
            return line;
        };
        check(next("magic") == kMagic, "cache: version mismatch in " + path);
        {
            std::istringstream hs(next("field"));
            std::string tag;
            unsigned p, n;
            hs >> tag >> p >> n;
            check(tag == "field" && p == f->characteristic() && n == f->zeta_order(),
                  "cache: field mismatch in " + path);
        }
        {
            std::istringstream hs(next("braiding"));
            std::string tag, hash;
            hs >> tag >> hash;
            check(tag == "braiding" && hash == A.b_.content_hash(),
                  "cache: braiding hash mismatch in " + path);
        }
        bool complete = false;
        size_t layer_count = 0;
        {
            std::istringstream hs(next("complete"));
            std::string tag;
            int c;
            hs >> tag >> c;
            check(tag == "complete", "cache: bad header");
            complete = c != 0;
        }
        {
            std::istringstream hs(next("layers"));
            std::string tag;
            hs >> tag >> layer_count;
            check(tag == "layers", "cache: bad header");
        }
        std::vector<Layer> layers;
        Layer l0;
        l0.degree = 0;
        l0.words.push_back({-1, -1});
        layers.push_back(std::move(l0));
        const int m = A.b_.letters();
        for (size_t n = 1; n < layer_count; ++n) {
            std::istringstream hs(next("layer"));
            std::string tag;
            int deg, dim;
            hs >> tag >> deg >> dim;
            check(tag == "layer" && deg == (int)n, "cache: bad layer header");
            Layer l;
            l.degree = deg;
            for (int j = 0; j < dim; ++j) {
                std::istringstream ws(next("word"));
                std::string wt;
                int x, i;
                ws >> wt >> x >> i;
                check(wt == "w", "cache: bad word line");
                l.words.push_back({x, i});
            }
            int rows = m * layers.back().dim();
            for (int r = 0; r < rows; ++r) {
                const std::string& s = next("red");
                check(s.rfind("r ", 0) == 0 || s == "r", "cache: bad reduction line");
                l.red.push_back(sparse_parse(f, s.size() > 1 ? s.substr(2) : ""));
            }
            l.der.assign(m, {});
            for (int y = 0; y < m; ++y)
                for (int j = 0; j < dim; ++j) {
                    const std::string& s = next("der");
                    check(s.rfind("d ", 0) == 0 || s == "d", "cache: bad derivation line");
                    l.der[y].push_back(sparse_parse(f, s.size() > 1 ? s.substr(2) : ""));
                }
            layers.push_back(std::move(l));
        }
        check(next("end") == "end", "cache: missing end marker");
        A.layers_ = std::move(layers);
        A.dims_.clear();
        for (const auto& l : A.layers_)
            A.dims_.push_back(l.dim());
        A.complete_ = complete;
        return true;
    }
};

bool cache_load(Algebra& A, const std::string& path) {
    return CacheIO::load(A, path);
}

void cache_store(const Algebra& A, const std::string& path) {
    CacheIO::store(A, path);
}

}  // namespace nichols
