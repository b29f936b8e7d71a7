// Tensor products of two su(1,1) representations restricted to the diagonal:
// holomorphic x holomorphic is discretely decomposable, holomorphic x
// anti-holomorphic is not.

#include "branchdec/decider.hpp"
#include "branchdec/serialization.hpp"

#include <iostream>
#include <memory>

int main() {
    using namespace branchdec;
    const auto base = std::make_shared<const RootDatum>(build_root_datum("su(1,1)^2"));
    const auto swap = build_swap_involution(base);
    for (const char* x : {"1,1", "1,-1"}) {
        const auto q = build_parabolic(base, parse_vector(x));
        std::cout << json_io::to_json(discretely_decomposable(swap, q)).dump(2) << "\n";
    }
}
