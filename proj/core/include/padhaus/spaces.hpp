#pragma once

#include "padhaus/functions.hpp"
#include "padhaus/geometry.hpp"

namespace padhaus {

// Index window for the suprema over scale indices. Sums with analytic tails
// ignore it; suprema search it and verify decay past its edges.
struct Window {
    int lo = -40;
    int hi = 40;
};

// A norm evaluation is window-limited when the input profile was itself a
// truncated grid, so tails past the window are unaccounted for.
enum class Exactness { Exact, WindowLimited };

struct NormResult {
    LogScalar value;
    Exactness exactness = Exactness::Exact;
};

// sup_g ( w(B_g)^{-(1+lambda q)} int_{B_g} |f|^q w dx )^{1/q}.
// Degenerate for lambda < -1/q (the space collapses to {0}); returns zero.
NormResult central_morrey_norm(int p, int n, const SeparableFunction& f, double q, double lambda,
                               PowerWeight w, Window win = {});

// ( sum_k p^{k beta ell} ||f chi_k||^ell_{L^q_w} )^{1/ell}.
NormResult herz_norm(int p, int n, const SeparableFunction& f, double q, double beta, double ell,
                     PowerWeight w, Window win = {});

// Herz norm with p^{k beta} replaced by w(B_k)^{beta/n}.
NormResult dot_herz_norm(int p, int n, const SeparableFunction& f, double q, double beta,
                         double ell, PowerWeight w, Window win = {});

// sup_{k0} p^{-k0 lambda} ( sum_{k<=k0} p^{k beta ell} ||f chi_k||^ell )^{1/ell},
// lambda >= 0.
NormResult morrey_herz_norm(int p, int n, const SeparableFunction& f, double q, double beta,
                            double ell, double lambda, PowerWeight w, Window win = {});

// Weighted mean of b over the ball B_g (signed).
LogScalar ball_average(int p, int n, const SeparableFunction& b, int gamma, PowerWeight w);

// sup_g ( w(B_g)^{-1} int_{B_g} |b - b_{w,B_g}|^q w dx )^{1/q}.
NormResult cmo_norm(int p, int n, const SeparableFunction& b, double q, PowerWeight w,
                    Window win = {});

} // namespace padhaus
