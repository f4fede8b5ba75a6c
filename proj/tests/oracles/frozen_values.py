from mpmath import mp, mpf, mpc, polyroots, arg, fabs, quad, pi, exp, coth, conj, cos, sin
mp.dps = 30
a = mpc(0, 0.5)
def phi(z): return z*(a - z)/(1 - conj(a)*z)
def dmod(z): return 1 + (1-abs(a)**2)/abs(z-a)**2
alpha = mpc(0,1)
# z^2 - (1/2 + i/2) z + i = 0
for r in polyroots([1, -(mpf(1)/2 + mpc(0,1)/2), mpc(0,1)]):
    t = arg(r) % (2*pi)
    print("atom", mp.nstr(t, 20), mp.nstr(1/dmod(r), 20), mp.nstr(abs(phi(r)-alpha), 5), mp.nstr(abs(r),20))
print("coth", mp.nstr(coth(mpf(1)/2), 20))
# quadratic RIF alpha=-1 Poisson integral
z1 = mpc(0.4, 0); z2 = mpc(0, 0.3)
def P(z, w): return (1-abs(z)**2)/abs(w-z)**2
def integrand(t):
    w = exp(mpc(0,t))
    return (P(z1,w)*P(z2,conj(w))*abs(w-1)**2/4 + P(z1,1)*P(z2,w)/2)/(2*pi)
I = quad(integrand, [0, pi, 2*pi])
def p(x,y): return 4 - 3*x + x**2 + y*(-1 - x)
def pt(x,y): return y*(1 - 3*x + 4*x**2) + (-x - x**2)
ph = pt(z1,z2)/p(z1,z2)
rhs = (1-abs(ph)**2)/abs(-1-ph)**2
print("ex36", mp.nstr(I, 20), mp.nstr(rhs, 20))
# generic alpha = e^{i pi/2}: W and B at zeta = e^{0.7i}
al = exp(mpc(0, pi/2))
w = exp(mpc(0, 0.7))
B = (4*w**2 - 3*w + 1 + al + al*w)/(4*al - 3*w*al + w**2*al + w**2 + w)
W = 4*abs(w-1)**4/abs(4*w**2 - 3*w + 1 + al + al*w)**2
print("B", mp.nstr(B.real, 20), mp.nstr(B.imag, 20), "W", mp.nstr(W, 20), "phi at curve", mp.nstr(pt(w, conj(B))/p(w, conj(B)), 20))
