"""Independent closed-form oracles used to freeze expected values in the C++ tests.

Every value is computed with mpmath at 40 digits from textbook formulas
(circular segment area and centroid, tangent-line intersection on the
circle, parabola closed forms). Nothing here calls into the library.
"""
import mpmath as mp

mp.mp.dps = 40


def circle(h, r=1):
    # lower circle f(x) = r - sqrt(r^2 - x^2), probe at the vertex
    t = mp.sqrt(r**2 - (r - h) ** 2)
    fp = t / mp.sqrt(r**2 - t**2)
    y0 = h - t * fp  # apex height: tangent at (t, h) crosses x = 0
    theta = 2 * mp.asin(t / r)
    area = r**2 * (theta - mp.sin(theta)) / 2
    centre_to_g = 4 * r * mp.sin(theta / 2) ** 3 / (3 * (theta - mp.sin(theta)))
    g = h - (r - centre_to_g)
    j = h - (2 * h + y0) / 3
    k = h - y0 / 3
    alpha = 2 * mp.sqrt(h) / fp
    foot = t - h / fp
    return dict(t=t, L=2 * t, y0=y0, S=area, T=h * t, g=g, j=j, k=k,
                alpha=alpha, foot=foot)


def main():
    c = circle(mp.mpf("0.5"))
    for key in ("t", "L", "y0", "S", "T", "g", "j", "k", "alpha", "foot"):
        print(f"circle h=0.5 {key:6s} = {mp.nstr(c[key], 17)}")
    print("circle h=0.5 S/T    =", mp.nstr(c["S"] / c["T"], 17))
    print("circle h=0.01 j/h   =", mp.nstr(circle(mp.mpf("0.01"))["j"] / mp.mpf("0.01"), 17))

    # power-law fit residual for circle j over h in [0.05, 0.5] (10 geometric points)
    hs = [mp.mpf("0.5") * (mp.mpf("0.1") ** (mp.mpf(i) / 9)) for i in range(10)]
    xs = [mp.log(h) for h in hs]
    ys = [mp.log(circle(h)["j"]) for h in hs]
    n = len(xs)
    mx, my = sum(xs) / n, sum(ys) / n
    mu = sum((x - mx) * (y - my) for x, y in zip(xs, ys)) / sum((x - mx) ** 2 for x in xs)
    lam = mp.e ** (my - mu * mx)
    res = max(abs(circle(h)["j"] - lam * h**mu) / circle(h)["j"] for h in hs)
    print("circle j power-law  mu =", mp.nstr(mu, 10), "lambda =", mp.nstr(lam, 10),
          "residual =", mp.nstr(res, 6))

    # parabola a=1, probe x=1, h=0.2: L = 2 sqrt(2) sqrt(h) / sqrt(kappa)
    kappa = 2 / mp.mpf(5) ** mp.mpf("1.5")
    print("parabola x=1 kappa  =", mp.nstr(kappa, 17))
    print("parabola x=1 h=0.2 L=", mp.nstr(2 * mp.sqrt(2) * mp.sqrt(mp.mpf("0.2")) / mp.sqrt(kappa), 17))

    # truncation of the three-point central difference of sqrt(h) at eps = h/100
    eps = mp.mpf("0.01")
    d3 = (mp.sqrt(1 + eps) - mp.sqrt(1 - eps)) / (2 * eps)
    d5 = (-mp.sqrt(1 + 2 * eps) + 8 * mp.sqrt(1 + eps) - 8 * mp.sqrt(1 - eps)
          + mp.sqrt(1 - 2 * eps)) / (12 * eps)
    print("sqrt central diff 3-pt rel err =", mp.nstr(abs(d3 - mp.mpf("0.5")) / mp.mpf("0.5"), 6))
    print("sqrt central diff 5-pt rel err =", mp.nstr(abs(d5 - mp.mpf("0.5")) / mp.mpf("0.5"), 6))


if __name__ == "__main__":
    main()
