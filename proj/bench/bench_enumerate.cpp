// Compares the serial reference enumeration against the OpenMP kernels.
#include <chrono>
#include <cstdio>
#include <string>

#include "ndpoly/enumerate.hpp"

using namespace ndpoly;

namespace {

double timed(EnumMethod method, Coord g, bool parallel, std::size_t& classes) {
    EnumerateOptions opts;
    opts.parallel = parallel;
    opts.use_cache = false;
    auto t0 = std::chrono::steady_clock::now();
    GenusCorpus c = enumerate_by_genus(g, method, opts);
    classes = c.classes.size();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void compare(EnumMethod method, Coord g) {
    std::size_t ns = 0, np = 0;
    double ts = timed(method, g, false, ns);
    double tp = timed(method, g, true, np);
    std::printf("%-14s g=%lld: %5zu classes | serial %8.3fs | parallel %8.3fs | %.2fx%s\n",
                method == EnumMethod::HullRecursion ? "hull_recursion" : "bounded_box",
                static_cast<long long>(g), ns, ts, tp, ts / tp,
                ns == np ? "" : "  [MISMATCH]");
}

}  // namespace

int main(int argc, char** argv) {
    Coord gmax = argc > 1 ? std::stoll(argv[1]) : 6;
    std::printf("enumeration benchmark: serial reference vs OpenMP kernels\n");
    for (Coord g = 1; g <= std::min<Coord>(gmax, kMaxBoundedBoxGenus - 1); ++g)
        compare(EnumMethod::BoundedBox, g);
    for (Coord g = 4; g <= gmax; ++g) compare(EnumMethod::HullRecursion, g);
    return 0;
}
