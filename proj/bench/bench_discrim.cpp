// Times the serial reference, the OpenMP kernels on one thread, and the
// OpenMP kernels on N threads. Usage: discrim_bench [threads]

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <string>

#include "discrim/analysis.hpp"
#include "discrim/discriminator.hpp"
#include "discrim/threading.hpp"

using namespace discrim;

namespace {

double seconds(const std::function<void()>& f) {
    const auto start = std::chrono::steady_clock::now();
    f();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

int main(int argc, char** argv) {
    const int threads = argc > 1 ? std::atoi(argv[1]) : thread_count();
    std::cout << "threads: " << threads << "\n\n";
    bool ok = true;

    auto row = [&](const std::string& name, const std::function<void()>& reference_run,
                   const std::function<void()>& kernel_run) {
        const double ref = reference_run ? seconds(reference_run) : 0.0;
        set_thread_count(1);
        const double one = seconds(kernel_run);
        set_thread_count(threads);
        const double many = seconds(kernel_run);
        std::cout << name << "\n  reference " << ref << " s | kernel x1 " << one << " s | kernel x" << threads << ' '
                  << many << " s\n";
    };

    const auto f29 = Polynomial::quadratic_family(29);
    std::vector<DiscriminatorResult> ref_scan, par_scan;
    row("scan x(29x-1), n <= 500", [&] { ref_scan = reference::scan(f29, 500); },
        [&] { par_scan = scan(f29, 500); });
    for (std::size_t i = 0; i < ref_scan.size(); ++i) ok = ok && ref_scan[i].value == par_scan[i].value;

    const auto f49 = Polynomial::quadratic_family(49);
    row("scan x(49x-1), n <= 3000", {}, [&] { (void)scan(f49, 3000); });

    const auto square = Polynomial::monomial(2);
    DiscriminatorResult ref_one, par_one;
    row("compute x^2, n = 20000", [&] { ref_one = reference::compute(square, 20000); },
        [&] { par_one = compute(square, 20000); });
    ok = ok && ref_one == par_one;

    row("check_theorem3(400)", {}, [] { (void)check_theorem3(400); });

    std::cout << '\n' << (ok ? "results agree" : "RESULTS DIFFER") << '\n';
    return ok ? 0 : 1;
}
