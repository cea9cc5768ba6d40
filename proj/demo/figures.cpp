// Positive conjugates of s1 s2 in A4 and the induced action on the z elements.
#include <iostream>

#include "artin/artin.hpp"
#include "artin/io.hpp"

using namespace artin;

int main() {
    auto ctx = build_context("A4");
    Element a = io::parse_element(ctx, "s1 s2");
    SummitGraph g = compute_summit_graph(a, SummitKind::PositiveConjugates, GarsideStructure(ctx, 1));
    std::cout << io::summit_text(g);
    for (const auto& ar : g.arrows) {
        ArrowClass c = classify_arrow(g.vertices[ar.from], ar.label);
        std::cout << "  " << io::format_positive(letters(ar.label)) << " from " << io::format_word(to_word(g.vertices[ar.from]))
                  << ": " << to_string(c.type) << '\n';
    }
    ZActionGraph z = z_action_graph(g);
    for (std::size_t i = 0; i < z.z.size(); ++i)
        std::cout << "z_" << io::format_set(z.bases[i]) << " = " << io::format_element(z.z[i]) << '\n';
    for (const auto& ar : z.arrows)
        std::cout << "  " << ar.from << " -> " << ar.to << " by " << io::format_positive(letters(ar.label)) << '\n';

    ParabolicSubgroup P = parabolic_closure(io::parse_element(ctx, "s3 s1 s2 s3^-1"));
    std::cout << "closure of s3 s1 s2 s3^-1: " << io::format_parabolic(P) << '\n';
}
