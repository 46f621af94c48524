"""Dev harness: wavefn module against frozen oracle values."""

import math
import sys
import time

sys.path.insert(0, "src")

from pairtrap.numerics import NumericsError, QuadratureSpec, SeriesError
from pairtrap.solver import (InteractionModel, TrapGeometry, eigenenergies,
                             ground_energy_offset)
from pairtrap.specfun import PoleSignal
from pairtrap.wavefn import (ProfileSamples, SeriesTruncation, _gamma_u,
                             contact_coefficient, contact_scattering_length,
                             normalize, norm_squared_exact, profile_quasi1d,
                             profile_quasi2d, psi, psi_integral,
                             psi_series_axial, psi_series_radial, sample_grid)

FAILS = 0


def ck(name, got, want, tol=5e-10, rel=False):
    global FAILS
    err = abs(got - want)
    if rel:
        err /= abs(want)
    flag = ""
    if not err <= tol:
        flag = "  FAIL"
        FAILS += 1
    print("%-42s got=%-24.17g want=%-24.17g err=%.3g%s"
          % (name, got, want, err, flag))


def expect_raise(name, exc, fn):
    global FAILS
    try:
        fn()
    except exc:
        print("%-42s raised %s as expected" % (name, exc.__name__))
        return
    except Exception as e:  # noqa: BLE001
        print("%-42s WRONG exception %r  FAIL" % (name, e))
        FAILS += 1
        return
    print("%-42s did not raise  FAIL" % name)
    FAILS += 1


g1 = TrapGeometry(1.0)
g2 = TrapGeometry(2.0)
gh = TrapGeometry(0.5)
g100 = TrapGeometry(100.0)
g001 = TrapGeometry(0.01)

E_A = -0.75097286615434345631   # eta=2, a=1 bound level
E_B = -0.94599479983494543906   # eta=0.5, a=1
E_C = -0.89928644505420757799   # eta=1, a=1
E_D = 1.2767776093679154655     # eta=2, a=-2

print("== integral spot values ==")
ck("psiA(0.5,0.5)", psi_integral(0.5, 0.5, E_A, g2), 0.069232602199836216772)
ck("psiA(0.7,0.4)", psi_integral(0.7, 0.4, E_A, g2), 0.048168664270559559545)
ck("psiA(1.1,0.9)", psi_integral(1.1, 0.9, E_A, g2), 0.0059489902868791271473)
ck("psiA(0.9,1.3)", psi_integral(0.9, 1.3, E_A, g2), 0.0040076128860978973811)
ck("psiA(1.5,1.5)", psi_integral(1.5, 1.5, E_A, g2), 0.00042685954429793810556)
ck("psiB(0.5,0.5)", psi_integral(0.5, 0.5, E_B, gh), 0.078910723111900734098)
ck("psiB(0.7,0.4)", psi_integral(0.7, 0.4, E_B, gh), 0.059671440728601348949)
ck("psiB(1.1,0.9)", psi_integral(1.1, 0.9, E_B, gh), 0.01172218454589998591)
ck("psiB(1.5,1.5)", psi_integral(1.5, 1.5, E_B, gh), 0.0018214909830934418433)
ck("psiC(0.3,0.4)", psi_integral(0.3, 0.4, E_C, g1), 0.15136594725815289141)
ck("psiC(0.6,0.8)", psi_integral(0.6, 0.8, E_C, g1), 0.032242084783374948699)

print("== route agreement (series vs integral) ==")
tr = SeriesTruncation(max_terms=20000, tail_tol=1e-12)
for nm, (rho, z, E, g) in {
        "A(0.5,0.5)": (0.5, 0.5, E_A, g2),
        "B(0.7,0.4)": (0.7, 0.4, E_B, gh),
        "C(0.3,0.4)": (0.3, 0.4, E_C, g1)}.items():
    ref = psi_integral(rho, z, E, g)
    ck("radial %s" % nm, psi_series_radial(rho, z, E, g, tr), ref,
       tol=2e-10, rel=True)
    ck("axial  %s" % nm, psi_series_axial(rho, z, E, g, tr), ref,
       tol=2e-10, rel=True)
ck("auto route = integral",
   psi(0.5, 0.5, E_A, g2), psi_integral(0.5, 0.5, E_A, g2), tol=0.0)

print("== contact core: 2 pi r Psi toward 1 ==")
s2 = math.sqrt(0.5)
for r, wa, wr, wd in (
        (0.1, 0.86592999554179969113, 0.86568472743532748484,
         0.86580732039713498341),
        (0.05, 0.93114690058454708394, 0.93111341973257162876,
         0.93113015885460463892),
        (0.025, 0.96511153347075530169, 0.96510716270930415609,
         0.96510934804911577872)):
    tp = 2.0 * math.pi * r
    ck("2pi r Psi axial  r=%g" % r, tp * psi_integral(0.0, r, E_A, g2), wa)
    ck("2pi r Psi radial r=%g" % r, tp * psi_integral(r, 0.0, E_A, g2), wr)
    ck("2pi r Psi diag   r=%g" % r,
       tp * psi_integral(r * s2, r * s2, E_A, g2), wd)


def richardson_limit(direction):
    vals = []
    for h in (0.1, 0.05, 0.025):
        rho, z = (0.0, h) if direction == "ax" else (
            (h, 0.0) if direction == "rad" else (h * s2, h * s2))
        vals.append(2.0 * math.pi * h * psi_integral(rho, z, E_A, g2))
    r1 = [2.0 * vals[i + 1] - vals[i] for i in range(2)]
    return (4.0 * r1[1] - r1[0]) / 3.0


ck("richardson axial", richardson_limit("ax"), 0.99998028660018653369)
ck("richardson radial", richardson_limit("rad"), 0.99995383690477698701)
ck("richardson diag", richardson_limit("diag"), 0.99996705055414445989)

print("== contact slope and recovered scattering length ==")
sC = contact_coefficient(E_C, g1)
sD = contact_coefficient(E_D, g2)
ck("slope C", sC, -0.2250751005484297907, tol=1e-12)
ck("slope D", sD, 0.11254318306715013357, tol=1e-12)
ck("recovered a (C)", contact_scattering_length(E_C, g1),
   1.0000176762815479477, tol=1e-10)
ck("recovered a (D)", contact_scattering_length(E_D, g2),
   -1.999935250676005833, tol=1e-9)

print("== exact norm from the spectral derivative ==")
ck("norm2 C", norm_squared_exact(E_C, g1), 0.10483541193737225309, tol=1e-11)
ck("norm2 A", norm_squared_exact(E_A, g2), 0.098057854370093025274, tol=1e-11)
ck("norm2 D", norm_squared_exact(E_D, g2), 0.33308255581517926505, tol=1e-11)

print("== grid normalization: Gaussian ==")
t0 = time.time()
h = 0.01
rhos = [h * i for i in range(1, 321)]
zs = [h * j for j in range(0, 451)]
coords = []
vals = []
for z in zs:
    for rho in rhos:
        coords.append((rho, z))
        vals.append(math.exp(-0.5 * (2.0 * rho * rho + z * z)))
gauss = ProfileSamples(tuple(coords), tuple(vals), "integral")
ng = normalize(gauss, g2)
ck("gauss norm2 (eta=2)", ng.norm_constant ** 2, 2.7841639984158539226,
   tol=1e-6, rel=True)
ng2 = normalize(ng, g2)
ck("idempotent", ng2.norm_constant, 1.0, tol=1e-12)
tripled = ProfileSamples(gauss.coordinates,
                         tuple(3.0 * v for v in gauss.values), "integral")
nt = normalize(tripled, g2)
ck("scale invariance", nt.norm_constant, 3.0 * ng.norm_constant, tol=1e-12,
   rel=True)
ck("scaled values agree", nt.values[1234], ng.values[1234], tol=1e-15)
print("   gaussian normalize wall time %.2fs" % (time.time() - t0))

print("== grid normalization: contact-core state (eta=2, a=1) ==")
for hh, rmax, zmax in ((0.04, 2.8, 3.5), (0.02, 2.8, 3.5)):
    t0 = time.time()
    rr = [hh * i for i in range(1, int(rmax / hh) + 1)]
    zz = [hh * j for j in range(0, int(zmax / hh) + 1)]
    samp = sample_grid(rr, zz, E_A, g2)
    ns = normalize(samp, g2)
    n2 = ns.norm_constant ** 2
    rel = abs(n2 / 0.098057854370093025274 - 1.0)
    print("   h=%g: grid norm2=%.8g  rel err vs exact=%.3e  (%.1fs)"
          % (hh, n2, rel, time.time() - t0))
    ck("singular grid norm2 h=%g" % hh, n2, 0.098057854370093025274,
       tol=(1.5e-3 if hh == 0.04 else 3e-4), rel=True)

print("== normalization rejections ==")
small_r = [0.1 * i for i in range(1, 13)]
small_z = [0.1 * j for j in range(0, 13)]
cs = []
vs = []
for z in small_z:
    for rho in small_r:
        cs.append((rho, z))
        vs.append(math.exp(-0.5 * (2.0 * rho * rho + z * z)))
expect_raise("truncated grid tail", NumericsError,
             lambda: normalize(ProfileSamples(tuple(cs), tuple(vs),
                                              "integral"), g2))
flat = ProfileSamples(tuple(cs), tuple(1.0 for _ in cs), "integral")
expect_raise("non-decaying grid", NumericsError, lambda: normalize(flat, g2))
holey = ProfileSamples(tuple(cs[:-1]), tuple(vs[:-1]), "integral")
expect_raise("incomplete tensor grid", ValueError,
             lambda: normalize(holey, g2))

print("== quasi-1d profiles at unitarity, eta=100 ==")
x100 = 30.52139283992783975
E100 = ground_energy_offset(g100) - 2.0 * x100
ax100 = ((0.1, 1.2100070619574596492, 0.0073), (0.25, 0.18996368403104475887, 0.0147),
         (0.5, 0.011784836496772130793, 0.0240), (0.75, 0.00074781310293279851909, 0.0300),
         (1.0, 0.000047296241777333254696, 0.0316), (1.25, 2.9738675657352834041e-6, 0.0274))
for z, want, rd in ax100:
    got = psi_integral(0.0, z, E100, g100)
    ck("ax100 exact z=%g" % z, got, want, tol=5e-9, rel=True)
    asym = profile_quasi1d("axial", z, E100, g100)
    ck("ax100 asym reldiff z=%g" % z, abs(asym / got - 1.0), rd, tol=5e-4)
rad100 = ((0.02, 7.8279618580599731197, 0.0056), (0.04, 3.7178553197683986271, 0.0161),
          (0.05, 2.8590052034160637266, 0.0224), (0.06, 2.2685636438857024072, 0.0293),
          (0.07, 1.8337706186546701778, 0.0364), (0.08, 1.4985446513467320432, 0.0438),
          (0.09, 1.2318909765442663048, 0.0513), (0.1, 1.0152645442529152834, 0.0588))
for rho, want, rd in rad100:
    got = psi_integral(rho, 0.0, E100, g100)
    ck("rad100 exact rho=%g" % rho, got, want, tol=5e-9, rel=True)
    asym = profile_quasi1d("radial", rho, E100, g100)
    ck("rad100 asym reldiff rho=%g" % rho, abs(asym / got - 1.0), rd, tol=5e-4)

print("== axial tail slope, eta=100 ==")
target = -math.sqrt(2.0 * 2.0 * x100)
ck("slope target", target, -11.049233971624972292, tol=1e-12)
pts = {z: psi_integral(0.0, z, E100, g100) for z in (0.5, 0.75, 1.0, 1.25)}
for (z1, z2), want in (((0.5, 0.75), -11.029663428270537847),
                       ((0.75, 1.0), -11.042888988191441058),
                       ((1.0, 1.25), -11.066270083830362594)):
    s = (math.log(pts[z2]) - math.log(pts[z1])) / (z2 - z1)
    ck("log slope [%g,%g]" % (z1, z2), s, want, tol=1e-7, rel=True)
    ck("slope vs sqrt(-2 calE) [%g,%g]" % (z1, z2), abs(s / target - 1.0),
       0.0, tol=0.01)

print("== quasi-2d profiles at unitarity, eta=0.01 ==")
x001 = 0.12713773714532702721
E001 = ground_energy_offset(g001) - 2.0 * x001
rad001 = ((0.1, 1.5876444895142337189, 0.0025), (0.2, 0.78828400922060938044, 0.0049),
          (0.5, 0.30181196289444011659, 0.0112), (1.0, 0.13251565681921315646, 0.0202),
          (2.0, 0.044750660928535721419, 0.0354), (2.5, 0.028232829656763952842, 0.0423),
          (3.0, 0.018223086141299159029, 0.0488), (4.0, 0.0078938822601979833327, 0.0612),
          (6.0, 0.0016022661518944263577, 0.0833))
for rho, want, rd in rad001:
    got = psi_integral(rho, 0.0, E001, g001)
    ck("rad001 exact rho=%g" % rho, got, want, tol=5e-9, rel=True)
    asym = profile_quasi2d("radial", rho, E001, g001)
    ck("rad001 asym reldiff rho=%g" % rho, abs(asym / got - 1.0), rd, tol=5e-4)
ax001 = ((0.1, 1.5871680193937170556, 0.0049), (0.2, 0.78648659272762845959, 0.0134),
         (0.3, 0.51594427376368258279, 0.0247), (0.4, 0.37780097420410303858, 0.0380),
         (0.45, 0.33079282435391763274, 0.0452), (0.5, 0.2926221402383652003, 0.0526))
for z, want, rd in ax001:
    got = psi_integral(0.0, z, E001, g001)
    ck("ax001 exact z=%g" % z, got, want, tol=5e-9, rel=True)
    asym = profile_quasi2d("axial", z, E001, g001)
    ck("ax001 asym reldiff z=%g" % z, abs(asym / got - 1.0), rd, tol=5e-4)

print("== excited level anchors from the solver ==")
uni100 = InteractionModel.from_inverse_a(0.0)
lv = eigenenergies(uni100, g100, window=(100.6, 102.4))
ck("E_exc eta=100", lv[0].E, 101.58339646426736624, tol=1e-12, rel=True)
E_x100 = lv[0].E
lv = eigenenergies(uni100, g001, window=(0.5105, 0.5199))
ck("E_exc eta=0.01", lv[0].E, 0.51526579503906376952, tol=1e-12, rel=True)
E_x001 = lv[0].E

print("== single-mode dominance, excited eta=100 (radial series) ==")
trx = SeriesTruncation(max_terms=4000, tail_tol=1e-13)
a0 = 0.5 * (ground_energy_offset(g100) - E_x100)  # = x at the root
for z, want, tol in ((0.25, 0.0021708432488168650485, 1e-6),
                     (0.5, 6.1100358670738795833e-6, 1e-5),
                     (1.0, 1.8554185568865746452e-10, 1e-2)):
    full = psi_series_radial(0.0, z, E_x100, g100, trx)
    t00 = 100.0 * math.exp(-0.5 * z * z) * _gamma_u(a0, 0.5, z * z) \
        / (2.0 * math.pi ** 1.5)
    ck("m0 dominance z=%g" % z, abs(1.0 - t00 / full), want, tol=tol,
       rel=True)
full = psi_series_radial(0.0, 2.0, E_x100, g100, trx)
t00 = 100.0 * math.exp(-2.0) * _gamma_u(a0, 0.5, 4.0) / (2.0 * math.pi ** 1.5)
ck("m0 dominance z=2 (float floor)", abs(1.0 - t00 / full), 0.0, tol=5e-15)

print("== single-mode dominance, excited eta=0.01 (axial series) ==")
b0 = 0.5 * (ground_energy_offset(g001) - E_x001) / 0.01
k0full = {2.5: -0.098725609941591958903, 3.0: -0.13119260290109050269,
          3.5: -0.1576142239548934268, 4.0: -0.17938030681019847952}
k0err = {2.5: 0.0037542925134954043398, 3.0: 0.00092447008511099038909,
         3.5: 0.00025833560699124256477, 4.0: 0.000077529085636796635957}
for rho in (2.5, 3.0, 3.5, 4.0):
    full = psi_series_axial(rho, 0.0, E_x001, g001, trx)
    ck("k0 full rho=%g" % rho, full, k0full[rho], tol=5e-10, rel=True)
    w = 0.01 * rho * rho
    t00 = math.exp(-0.5 * w) * _gamma_u(b0, 1.0, w) / (2.0 * math.pi ** 1.5)
    ck("k0 ratio err rho=%g" % rho, abs(t00 / full - 1.0), k0err[rho],
       tol=1e-5, rel=True)

print("== domain and pole rejections ==")
expect_raise("integral at origin", ValueError,
             lambda: psi_integral(0.0, 0.0, E_A, g2))
expect_raise("integral above E0", ValueError,
             lambda: psi_integral(0.5, 0.5, 2.6, g2))
expect_raise("negative rho", ValueError,
             lambda: psi_integral(-0.1, 0.5, E_A, g2))
expect_raise("radial series at z=0", ValueError,
             lambda: psi_series_radial(0.5, 0.0, E_A, g2))
expect_raise("axial series at rho=0", ValueError,
             lambda: psi_series_axial(0.0, 0.5, E_A, g2))
expect_raise("radial series pole at E0", PoleSignal,
             lambda: psi_series_radial(0.5, 0.5, 2.5, g2))
expect_raise("axial pole at threshold", PoleSignal,
             lambda: psi_series_axial(0.5, 0.5, 2.5, g2))
expect_raise("series cap", SeriesError,
             lambda: psi_series_radial(0.5, 0.01, E_A, g2,
                                       SeriesTruncation(max_terms=10)))
expect_raise("profile needs bound E", ValueError,
             lambda: profile_quasi1d("axial", 0.5, 2.6, g2))
expect_raise("q1d radial rho=0", ValueError,
             lambda: profile_quasi1d("radial", 0.0, E_A, g2))
expect_raise("q2d axial z=0", ValueError,
             lambda: profile_quasi2d("axial", 0.0, E001, g001))
expect_raise("bad axis", ValueError,
             lambda: profile_quasi1d("diagonal", 0.5, E_A, g2))
expect_raise("contact above E0", ValueError,
             lambda: contact_coefficient(2.6, g2))
expect_raise("bad route", ValueError,
             lambda: psi(0.5, 0.5, E_A, g2, route="sideways"))
expect_raise("samples length mismatch", ValueError,
             lambda: ProfileSamples(((1.0, 1.0),), (1.0, 2.0), "integral"))
expect_raise("samples bad method", ValueError,
             lambda: ProfileSamples(((1.0, 1.0),), (1.0,), "guesswork"))
expect_raise("normalized needs constant", ValueError,
             lambda: ProfileSamples(((1.0, 1.0),), (1.0,), "integral",
                                    normalized=True))
expect_raise("truncation max_terms", ValueError,
             lambda: SeriesTruncation(max_terms=0))
expect_raise("truncation tail_tol", ValueError,
             lambda: SeriesTruncation(tail_tol=0.0))

print()
print("FAILS:", FAILS)
sys.exit(1 if FAILS else 0)
