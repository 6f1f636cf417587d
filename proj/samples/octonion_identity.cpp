// Builds the octonions as a twisted group algebra on F_2^3, prints the sign table of the
// basis products and the resulting eight-square identity, then checks it symbolically.
#include <iostream>

#include <hurwitz/hurwitz.hpp>

int main()
{
    using namespace hurwitz;
    const int n = 3;
    const auto alpha = make_alpha_O(n);
    const auto f = twist_from_cubic(alpha);
    std::cout << "alpha = " << to_text(alpha) << "\n";
    std::cout << "f     = " << to_text(f) << "\n\n";

    std::cout << "e_x * e_y (row x, column y):\n";
    for (std::uint64_t x = 0; x < 8; ++x) {
        for (std::uint64_t y = 0; y < 8; ++y) {
            const char sign = f.eval_bits(x, y) ? '-' : '+';
            std::cout << "  " << sign << 'e' << (x ^ y);
        }
        std::cout << "\n";
    }

    const auto id = build_identity(f, VecSet::full(n), VecSet::full(n));
    std::cout << "\n" << render_text(id);
    const auto check = verify_symbolic(id);
    std::cout << "\n(sum a_x^2)(sum b_y^2) = sum c_z^2: " << (check.holds ? "verified" : "FAILED") << " ("
              << check.products << " products expanded)\n";
    return check.holds ? 0 : 1;
}
