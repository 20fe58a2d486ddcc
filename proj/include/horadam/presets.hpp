#pragma once

#include <string>
#include <vector>

#include "horadam/errors.hpp"
#include "horadam/horadam_scalar.hpp"

namespace horadam {

/// One published family-specific formula attached to a preset, with the
/// value the general theorems derive for it. `discrepancy` marks the
/// formulas known not to match their derived counterparts; the remarks
/// checker re-verifies every entry numerically and reports both sides.
struct PresetExpectation {
    std::string item;       // stable id used by the remarks checker
    std::string published;  // the formula as published
    std::string derived;    // what the general closed forms give
    bool discrepancy;       // published != derived
};

struct Preset {
    std::string name;
    std::string alias;  // empty when none
    HoradamParams params;
    std::vector<PresetExpectation> expectations;
};

inline const std::vector<Preset>& all_presets() {
    static const std::vector<Preset> table = {
        {"fibonacci",
         "",
         {0, 1, 1, 1},
         {
             {"genfunc_numerator", "(0,1,1,2) + (1,0,1,1)t", "(0,1,1,2) + (1,0,1,1)t", false},
             {"cassini_constant", "(-1)^n (2,2,4,3)", "(-1)^n (2,2,4,3)", false},
             {"norm_formula", "(alpha^(2n)(15+6 sqrt5) + beta^(2n)(15-6 sqrt5))/5",
              "(alpha^(2n)(15+6 sqrt5) + beta^(2n)(15-6 sqrt5))/5", false},
             {"sum_formula", "F-quaternion(n+2) - F-quaternion(1)",
              "F-quaternion(n+2) - F-quaternion(1)", false},
             {"norm_aggregates", "tails (1+q+q^2+q^3) in B, (1-q+q^2-(-q)^-1) in C",
              "matches the direct norm for a=0", false},
         }},
        {"lucas",
         "",
         {2, 1, 1, 1},
         {
             {"genfunc_numerator", "(2,1,3,5) + (-1,2,2,2)t", "(2,1,3,4) + (-1,2,1,3)t", true},
             {"norm_aggregates", "tails (1+q+q^2+q^3) in B, (1-q+q^2-(-q)^-1) in C",
              "matches the direct norm for these parameters", false},
         }},
        {"pell",
         "",
         {0, 1, 2, 1},
         {
             {"genfunc_numerator", "(0,1,2,5) + (1,0,1,2)t", "(0,1,2,5) + (1,0,1,2)t", false},
             {"cassini_formula",
              "((-1)^(n+1)/4)(alpha_q beta_q (alpha^2+2) - beta_q alpha_q beta^2)",
              "AB (alpha beta)^(n-1)/(alpha-beta) (beta alpha_q beta_q - alpha beta_q alpha_q)",
              true},
             {"norm_formula", "(alpha^(2n)(120+84 sqrt2) + beta^(2n)(120-84 sqrt2))/8",
              "(alpha^(2n)(120+84 sqrt2) + beta^(2n)(120-84 sqrt2))/8", false},
             {"sum_constant", "K = -(1/2) MP-quaternion(0)", "K = -(1/2) MP-quaternion(0)", false},
             {"sum_formula", "(1/2)(MP-quaternion(n) - MP-quaternion(0))",
              "(1/2)(MP-quaternion(n+1) - MP-quaternion(0))", true},
             {"norm_aggregates", "tails (1+q+q^2+q^3) in B, (1-q+q^2-(-q)^-1) in C",
              "matches the direct norm for a=0", false},
         }},
        {"pell_lucas",
         "modified_pell",
         {2, 1, 2, 1},
         {
             {"genfunc_numerator", "(2,1,4,9) + (-3,2,1,4)t", "(2,1,4,9) + (-3,2,1,4)t", false},
             {"norm_aggregates", "tails (1+q+q^2+q^3) in B, (1-q+q^2-(-q)^-1) in C",
              "tail (1-q+q^2-q^3) throughout; published tails give 104 at n=0, direct gives 102",
              true},
         }},
        {"jacobsthal",
         "",
         {0, 1, 1, 2},
         {
             {"genfunc_numerator", "(0,1,1,3) + (1,0,2,2)t", "(0,1,1,3) + (1,0,2,2)t", false},
             {"norm_formula", "(85 4^n + 10 (-2)^n + 4)/9", "(85 4^n + 10 (-2)^n + 4)/9", false},
             {"sum_formula", "J-quaternion(n+2) - (1/2) J-quaternion(1), K numerator (1,1,3,7)",
              "(1/2)(J-quaternion(n+2) - J-quaternion(1)), K numerator (1,1,3,5)", true},
             {"norm_aggregates", "tails (1+q+q^2+q^3) in B, (1-q+q^2-(-q)^-1) in C",
              "matches the direct norm for a=0", false},
         }},
        {"jacobsthal_lucas",
         "",
         {2, 1, 1, 2},
         {
             {"genfunc_numerator", "(2,1,5,7) + (-1,4,2,10)t", "(2,1,5,7) + (-1,4,2,10)t", false},
             {"norm_aggregates", "tails (1+q+q^2+q^3) in B, (1-q+q^2-(-q)^-1) in C",
              "tail (1-q+q^2-q^3) throughout; published tails are not rational-valued here",
              true},
         }},
    };
    return table;
}

inline const Preset& preset_lookup(const std::string& name) {
    for (const Preset& p : all_presets())
        if (p.name == name || (!p.alias.empty() && p.alias == name)) return p;
    throw UnknownPreset(name);
}

inline const std::vector<PresetExpectation>& preset_expectations(const std::string& name) {
    return preset_lookup(name).expectations;
}

inline std::vector<std::string> preset_names() {
    std::vector<std::string> names;
    for (const Preset& p : all_presets()) names.push_back(p.name);
    return names;
}

}  // namespace horadam
