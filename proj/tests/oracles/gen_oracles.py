"""Offline oracle generator (mpmath, 50 digits). Output is frozen into tests/oracle_values.hpp."""
import mpmath as mp

mp.mp.dps = 50


def f17(x):
    return format(float(x), ".17g")


def main():
    out = []
    out.append("// Generated by tests/oracles/gen_oracles.py (mpmath, 50 digits). Do not edit.")
    out.append("#pragma once")
    out.append("#include <array>")
    out.append("#include <utility>")
    out.append("")
    out.append("namespace radonfd::oracle {")
    out.append("")
    # 100 log-gamma points spread over (0, 200]: geometric near 0, linear above.
    pts = []
    for i in range(40):
        pts.append(mp.mpf(10) ** (mp.mpf(-3) + mp.mpf(i) * mp.mpf(4) / 39))  # 1e-3 .. 10
    for i in range(60):
        pts.append(mp.mpf(10) + mp.mpf(i + 1) * mp.mpf(190) / 60 - mp.mpf("0.37"))
    pts = sorted(set(pts))
    assert len(pts) == 100
    out.append("inline constexpr std::array<std::pair<double, double>, 100> kLogGamma{{")
    for x in pts:
        xd = mp.mpf(float(x))
        out.append(f"    {{{f17(xd)}, {f17(mp.loggamma(xd))}}},")
    out.append("}};")
    out.append("")
    out.append(f"inline constexpr double kLogGamma3p7 = {f17(mp.loggamma(mp.mpf('3.7')))};")
    out.append(f"inline constexpr double kRecipGammaNeg2p3 = {f17(1 / mp.gamma(mp.mpf('-2.3')))};")
    out.append(f"inline constexpr double kRecipGammaNeg0p3 = {f17(1 / mp.gamma(mp.mpf('-0.3')))};")

    def cor1(n, q):
        n = mp.mpf(n); q = mp.mpf(q)
        return (2 ** (q + 1) * mp.pi ** ((n - 2) / 2) * mp.gamma((q + 1) / 2) * mp.cos(mp.pi * q / 2)
                / ((n - q - 1) * mp.gamma((n - q - 1) / 2)))

    def eq8(n, q):
        n = mp.mpf(n); q = mp.mpf(q)
        return (2 ** q * mp.pi ** ((n - 2) / 2) * mp.gamma((q + 1) / 2) * mp.gamma(1 + n / 2) ** ((n - q - 1) / n)
                / (mp.gamma((n - q - 1) / 2 + 1) * mp.pi ** ((n - q - 1) / 2)))

    out.append("")
    out.append("// {n, q, closed form of the un-normalized ball derivative}")
    rows = []
    for n in (3, 4, 5):
        for q in ("0", "0.5", "1.5", "2.5"):
            if mp.mpf(q) < n - 1:
                rows.append((n, q, cor1(n, q)))
    out.append(f"inline constexpr std::array<std::array<double, 3>, {len(rows)}> kBallDerivative{{{{")
    for n, q, v in rows:
        out.append(f"    {{{n}, {q}, {f17(v)}}},")
    out.append("}};")
    rows = []
    for n in (3, 4, 5, 8):
        for q in ("0", "0.5", "1", "1.5", "2.5"):
            if mp.mpf(q) < n - 1:
                rows.append((n, q, eq8(n, q)))
    out.append("// {n, q, normalized derivative of the volume-one ball (continuous at odd q)}")
    out.append(f"inline constexpr std::array<std::array<double, 3>, {len(rows)}> kVolumeOneBall{{{{")
    for n, q, v in rows:
        out.append(f"    {{{n}, {q}, {f17(v)}}},")
    out.append("}};")

    n, q, c = mp.mpf(4), mp.mpf("1.5"), mp.mpf("0.1")
    t1 = (c * (q + 1) / mp.sqrt(n * mp.log(n * mp.e / (q + 1)) ** 3)) ** (q + 1)
    out.append(f"inline constexpr double kTheorem1Bound_n4_q1p5_c0p1 = {f17(t1)};")
    n, q = mp.mpf(4), mp.mpf(3)
    out.append(f"inline constexpr double kKpz_n4_q3 = {f17(mp.sqrt(n * mp.log(n * mp.e / q) ** 3 / q))};")
    out.append(f"inline constexpr double kKpz_n9_q1 = {f17(3 * mp.log(9 * mp.e) ** mp.mpf(1.5))};")
    # Fourier power constant n=3, lambda=-1.3
    n, lam = mp.mpf(3), mp.mpf("-1.3")
    fpc = 2 ** (lam + n) * mp.pi ** (n / 2) * mp.gamma((lam + n) / 2) / mp.gamma(-lam / 2)
    out.append(f"inline constexpr double kFourierConst_n3_lm1p3 = {f17(fpc)};")
    # Lp ball volume n=3, p=3
    p = mp.mpf(3)
    out.append(f"inline constexpr double kL3BallVolume3 = {f17(8 * mp.gamma(1 + 1 / p) ** 3 / mp.gamma(1 + 3 / p))};")
    out.append("")
    out.append("}  // namespace radonfd::oracle")
    print("\n".join(out))


if __name__ == "__main__":
    main()
