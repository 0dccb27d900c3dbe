"""Builtin identity library, written in the identity DSL.

Every definition below is parsed once into the macro table of
:mod:`freeterm`. Later definitions may call earlier ones. The generator
families ``g_lie4_*``, ``g_rcom4_*`` and ``g_jor5_*`` are the general-form
generators of the degree-4 anticommutative, degree-4 right-commutative and
degree-5 commutative identity spaces of the partial-sum model.
"""

import itertools

from sympy.combinatorics import Permutation

LETTERS = "abcdefghijklmnopqrstuvwxyz"


# -----------------------------------------------------------------------------
def _standard_skew(arity: int, left: str, right: str, sep: str) -> str:
    """Signed sum over permutations fixing the first slot of the left-normed word.

    :param arity: number of variables
    :param left: opening token of the product, ``(`` or ``[``
    :param right: closing token
    :param sep: token between the two factors, ``*`` or ``,``
    """
    names = LETTERS[:arity]
    terms = []
    for tail in itertools.permutations(range(1, arity)):
        perm = (0,) + tail
        word = names[perm[0]]
        for index in perm[1:]:
            word = f"{left}{word}{sep}{names[index]}{right}"
        sign = "+" if Permutation(list(perm)).signature() > 0 else "-"
        terms.append(f"{sign} {word}")
    body = " ".join(terms).lstrip("+ ")
    return f"({','.join(names)}) := {body}"


CORE = [
    # brackets and associators
    "assoc(x,y,z) := x*(y*z) - (x*y)*z",
    "jassoc(x,y,z) := {x,{y,z}} - {{x,y},z}",
    "jac(x,y,z) := [[x,y],z] + [[y,z],x] + [[z,x],y]",
    # named identities
    "comm(a,b) := a*b - b*a",
    "acom(a,b) := a*b + b*a",
    "rcom(t1,t2,t3) := (t1*t2)*t3 - (t1*t3)*t2",
    "zinbiel(a,b,c) := (a*b)*c - a*(b*c) - a*(c*b)",
    "lsym(a,b,c) := assoc(a,b,c) - assoc(b,a,c)",
    "rsym(a,b,c) := assoc(a,b,c) - assoc(a,c,b)",
    "f4(t1,t2,t3,t4) := t1*([t2,t3]*t4) - assoc(t1,t2,t3*t4) + assoc(t1,t3,t2*t4)",
    "f4p(t1,t2,t3,t4) := assoc(t1,t2,[t3,t4]) + assoc(t1,t3,[t4,t2]) + assoc(t1,t4,[t2,t3])",
    "f5(t1,t2,t3,t4,t5) := assoc(t1,t4,assoc(t2,t5,t3)) - assoc(t1,t5,assoc(t2,t4,t3))"
    " + assoc(t2,t4,assoc(t1,t5,t3)) - assoc(t2,t5,assoc(t1,t4,t3))",
    "f5plus(a,b,c,u,v) := jassoc(a,u,jassoc(b,v,c)) - jassoc(a,v,jassoc(b,u,c))"
    " + jassoc(b,u,jassoc(a,v,c)) - jassoc(b,v,jassoc(a,u,c))",
    "fskew(a,b,c,u,v) := -jassoc(a,v,jassoc(b,u,c)) + jassoc(a,u,jassoc(b,v,c))",
    "tortkara(a,u,b,v) := [[a,u],[b,v]] + [[a,v],[b,u]] - [jac(a,u,b),v] - [jac(a,v,b),u]",
    "tortken(a,b,c,d) := {{a,b},{c,d}} - {{a,d},{c,b}} - {jassoc(a,b,c),d} + {jassoc(a,d,c),b}",
    "s13" + _standard_skew(4, "(", ")", "*"),
    "stdskew5" + _standard_skew(5, "[", "]", ","),
    "stdskew5p" + _standard_skew(5, "(", ")", "*"),
    "cyc4(a,b,c,d) := (a*[b,c])*d + (a*[c,d])*b + (a*[d,b])*c",
    "novikov5(a,b,c,d,e) := (a*(b*c))*[d,e] - b*((a*[d,e])*c) + b*(d*[c,a*e]) + b*((a*e)*[c,d])"
    " + b*([d,a*e]*c) - b*((a*d)*[c,e]) - b*(e*[c,a*d]) - b*([e,a*d]*c)"
    " + d*[a*e,b*c] - e*[a*d,b*c] + (a*[e,b*c])*d - (a*[d,b*c])*e",
    "novsub4(a,b,c,d) := -2 {a,c}*(b*d) + 2 {a,d}*(b*c) + 2 {b,c}*(a*d) - 2 {b,d}*(a*c)"
    " - 2 (a*(b*c))*d + 2 (a*(b*d))*c + 2 (b*(a*c))*d - 2 (b*(a*d))*c"
    " - 2 (c*(a*d))*b + 2 (c*(b*d))*a + 2 (d*(a*c))*b - 2 (d*(b*c))*a"
    " + 2 ((a*c)*d)*b - 2 ((a*d)*c)*b - 2 ((b*c)*d)*a + 2 ((b*d)*c)*a"
    " - ((a*b)*c)*d + ((a*b)*d)*c - ((a*c)*b)*d + ((a*d)*b)*c"
    " + ((b*a)*c)*d - ((b*a)*d)*c + ((b*c)*a)*d - ((b*d)*a)*c"
    " + ((c*a)*b)*d - ((c*b)*a)*d - ((d*a)*b)*c + ((d*b)*a)*c",
]

# Degree-4 anticommutative generators, Lie words.
LIE4 = [
    "g_lie4_1(a,b,c,d) := -[[a,b],[c,d]] + [[a,c],[b,d]] + [[[a,b],c],d] - [[[a,c],b],d]"
    " + [[[b,c],a],d] + [[[b,c],d],a] - [[[b,d],c],a] + [[[c,d],b],a]",
    "g_lie4_2(a,b,c,d) := [[a,b],[c,d]] + [[a,d],[b,c]] + [[[a,b],d],c] - [[[a,d],b],c]"
    " - [[[b,c],d],a] + [[[b,d],a],c] + [[[b,d],c],a] - [[[c,d],b],a]",
    "g_lie4_3(a,b,c,d) := [[a,c],[b,d]] - [[a,d],[b,c]] + [[[a,c],d],b] - [[[a,d],c],b]"
    " + [[[b,c],d],a] - [[[b,d],c],a] + [[[c,d],a],b] + [[[c,d],b],a]",
]

# Tortkara combinations equal to each generator after anticommutative normal form.
LIE4_DECOMPOSITIONS = {
    1: "tortkara(a,c,b,d) - tortkara(b,a,d,c)",
    2: "tortkara(b,a,d,c)",
    3: "tortkara(c,a,d,b)",
}

# The same combinations as published, attached to g1, g2, g3 in a cyclic shift.
LIE4_PRINTED = {
    1: "tortkara(c,a,d,b)",
    2: "tortkara(a,c,b,d) - tortkara(b,a,d,c)",
    3: "tortkara(b,a,d,c)",
}

# Degree-4 right-commutative generators.
RCOM4 = [
    "g_rcom4_1(a,b,c,d) := -a*(b*(d*c)) + a*(d*(b*c)) + a*((b*c)*d) - a*((d*b)*c) + (a*b)*(d*c) - (a*d)*(b*c)",
    "g_rcom4_2(a,b,c,d) := -a*(c*(d*b)) + a*(d*(c*b)) + a*((c*b)*d) - a*((d*b)*c) + (a*c)*(d*b) - (a*d)*(c*b)",
    "g_rcom4_3(a,b,c,d) := -a*(b*(c*d)) + a*(b*(d*c)) + a*(c*(b*d)) - a*(c*(d*b)) - a*(d*(b*c)) + a*(d*(c*b)) + (a*b)*(c*d) - (a*b)*(d*c) - (a*c)*(b*d) + (a*c)*(d*b) + (a*d)*(b*c) - (a*d)*(c*b)",
    "g_rcom4_4(a,b,c,d) := -b*(a*(d*c)) + b*(d*(a*c)) + b*((a*c)*d) - b*((d*a)*c) + (b*a)*(d*c) - (b*d)*(a*c)",
    "g_rcom4_5(a,b,c,d) := -b*(c*(d*a)) + b*(d*(c*a)) + b*((c*a)*d) - b*((d*a)*c) + (b*c)*(d*a) - (b*d)*(c*a)",
    "g_rcom4_6(a,b,c,d) := -b*(a*(c*d)) + b*(a*(d*c)) + b*(c*(a*d)) - b*(c*(d*a)) - b*(d*(a*c)) + b*(d*(c*a)) + (b*a)*(c*d) - (b*a)*(d*c) - (b*c)*(a*d) + (b*c)*(d*a) + (b*d)*(a*c) - (b*d)*(c*a)",
    "g_rcom4_7(a,b,c,d) := -c*(a*(d*b)) + c*(d*(a*b)) + c*((a*b)*d) - c*((d*a)*b) + (c*a)*(d*b) - (c*d)*(a*b)",
    "g_rcom4_8(a,b,c,d) := -c*(b*(d*a)) + c*(d*(b*a)) + c*((b*a)*d) - c*((d*a)*b) + (c*b)*(d*a) - (c*d)*(b*a)",
    "g_rcom4_9(a,b,c,d) := -c*(a*(b*d)) + c*(a*(d*b)) + c*(b*(a*d)) - c*(b*(d*a)) - c*(d*(a*b)) + c*(d*(b*a)) + (c*a)*(b*d) - (c*a)*(d*b) - (c*b)*(a*d) + (c*b)*(d*a) + (c*d)*(a*b) - (c*d)*(b*a)",
    "g_rcom4_10(a,b,c,d) := -d*(a*(c*b)) + d*(c*(a*b)) + d*((a*b)*c) - d*((c*a)*b) + (d*a)*(c*b) - (d*c)*(a*b)",
    "g_rcom4_11(a,b,c,d) := -d*(b*(c*a)) + d*(c*(b*a)) + d*((b*a)*c) - d*((c*a)*b) + (d*b)*(c*a) - (d*c)*(b*a)",
    "g_rcom4_12(a,b,c,d) := -d*(a*(b*c)) + d*(a*(c*b)) + d*(b*(a*c)) - d*(b*(c*a)) - d*(c*(a*b)) + d*(c*(b*a)) + (d*a)*(b*c) - (d*a)*(c*b) - (d*b)*(a*c) + (d*b)*(c*a) + (d*c)*(a*b) - (d*c)*(b*a)",
]

RCOM4_DECOMPOSITIONS = {
    1: "f4(a,b,d,c)",
    2: "f4(a,c,d,b)",
    3: "f4(a,b,c,d) - f4(a,b,d,c) + f4(a,c,d,b)",
    4: "f4(b,a,d,c)",
    5: "f4(b,c,d,a)",
    6: "f4(b,a,c,d) - f4(b,a,d,c) + f4(b,c,d,a)",
    7: "f4(c,a,d,b)",
    8: "f4(c,b,d,a)",
    9: "f4(c,a,b,d) - f4(c,a,d,b) + f4(c,b,d,a)",
    10: "f4(d,a,c,b)",
    11: "f4(d,b,c,a)",
    12: "f4(d,a,b,c) - f4(d,a,c,b) + f4(d,b,c,a)",
}

# Degree-5 commutative generators, Jordan words.
JOR5 = [
    "g_jor5_1(a,b,c,d,e) := -{{{a, c}, d}, {b, e}} + {{{a, d}, c}, {b, e}} + {{{b, c}, e}, {a, d}} - {{{b, d}, e}, {a, c}} - {{{b, e}, c}, {a, d}} + {{{b, e}, d}, {a, c}} + {{{{a, c}, d}, b}, e} - {{{{a, d}, c}, b}, e} - {{{{b, c}, d}, a}, e} + {{{{b, c}, d}, e}, a} - {{{{b, c}, e}, d}, a} + {{{{b, d}, c}, a}, e} - {{{{b, d}, c}, e}, a} + {{{{b, d}, e}, c}, a} + {{{{b, e}, c}, d}, a} - {{{{b, e}, d}, c}, a}",
    "g_jor5_2(a,b,c,d,e) := -{{{a, d}, e}, {b, c}} + {{{a, e}, d}, {b, c}} - {{{b, c}, d}, {a, e}} + {{{b, c}, e}, {a, d}} + {{{b, d}, c}, {a, e}} - {{{b, e}, c}, {a, d}} + {{{{a, d}, e}, b}, c} - {{{{a, e}, d}, b}, c} + {{{{b, c}, d}, e}, a} - {{{{b, c}, e}, d}, a} - {{{{b, d}, c}, e}, a} - {{{{b, d}, e}, a}, c} + {{{{b, d}, e}, c}, a} + {{{{b, e}, c}, d}, a} + {{{{b, e}, d}, a}, c} - {{{{b, e}, d}, c}, a}",
    "g_jor5_3(a,b,c,d,e) := -{{{a, c}, e}, {b, d}} + {{{a, e}, c}, {b, d}} + {{{b, c}, d}, {a, e}} - {{{b, d}, c}, {a, e}} + {{{b, d}, e}, {a, c}} - {{{b, e}, d}, {a, c}} + {{{{a, c}, e}, b}, d} - {{{{a, e}, c}, b}, d} - {{{{b, c}, d}, e}, a} - {{{{b, c}, e}, a}, d} + {{{{b, c}, e}, d}, a} + {{{{b, d}, c}, e}, a} - {{{{b, d}, e}, c}, a} + {{{{b, e}, c}, a}, d} - {{{{b, e}, c}, d}, a} + {{{{b, e}, d}, c}, a}",
    "g_jor5_4(a,b,c,d,e) := -{{{a, d}, b}, {c, e}} + {{{a, d}, c}, {b, e}} + {{{b, d}, a}, {c, e}} - {{{b, e}, c}, {a, d}} - {{{c, d}, a}, {b, e}} + {{{c, e}, b}, {a, d}} + {{{{a, d}, b}, c}, e} - {{{{a, d}, c}, b}, e} - {{{{b, d}, a}, c}, e} + {{{{b, d}, c}, a}, e} -{{{{b, d}, c}, e}, a} + {{{{b, e}, c}, d}, a} + {{{{c, d}, a}, b}, e} - {{{{c, d}, b}, a}, e} + {{{{c, d}, b}, e}, a} - {{{{c, e}, b}, d}, a}",
    "g_jor5_5(a,b,c,d,e) := -{{{a, e}, b}, {c, d}} + {{{a, e}, c}, {b, d}} - {{{b, d}, c}, {a, e}} + {{{b, e}, a}, {c, d}} + {{{c, d}, b}, {a, e}} - {{{c, e}, a}, {b, d}} + {{{{a, e}, b}, c}, d} - {{{{a, e}, c}, b}, d} + {{{{b, d}, c}, e}, a} - {{{{b, e}, a}, c}, d} + {{{{b, e}, c}, a}, d} - {{{{b, e}, c}, d}, a} - {{{{c, d}, b}, e}, a} + {{{{c, e}, a}, b}, d} - {{{{c, e}, b}, a}, d} + {{{{c, e}, b}, d}, a}",
    "g_jor5_6(a,b,c,d,e) := -{{{a, b}, d}, {c, e}} + {{{a, d}, c}, {b, e}} + {{{b, c}, e}, {a, d}} + {{{b, d}, a}, {c, e}} - {{{b, e}, c}, {a, d}} - {{{c, d}, a}, {b, e}} - {{{c, d}, e}, {a, b}} + {{{c, e}, d}, {a, b}} + {{{{a, b}, d}, c}, e} - {{{{a, d}, c}, b}, e} - {{{{b, c}, d}, a}, e} + {{{{b, c}, d}, e}, a} - {{{{b, c}, e}, d}, a} - {{{{b, d}, a}, c}, e} + {{{{b, d}, c}, a}, e} - {{{{b, d}, c}, e}, a} + {{{{b, e}, c}, d}, a} + {{{{c, d}, a}, b}, e} + {{{{c, d}, e}, b}, a} - {{{{c, e}, d}, b}, a}",
    "g_jor5_7(a,b,c,d,e) := -{{{a, d}, e}, {b, c}} + {{{a, e}, d}, {b, c}} - {{{b, c}, d}, {a, e}} + {{{b, c}, e}, {a, d}} + {{{c, d}, b}, {a, e}} - {{{c, e}, b}, {a, d}} + {{{{a, d}, e}, c}, b} - {{{{a, e}, d}, c}, b} + {{{{b, c}, d}, e}, a} - {{{{b, c}, e}, d}, a} - {{{{c, d}, b}, e}, a} - {{{{c, d}, e}, a}, b} + {{{{c, d}, e}, b}, a} + {{{{c, e}, b}, d}, a} + {{{{c, e}, d}, a}, b} - {{{{c, e}, d}, b}, a}",
    "g_jor5_8(a,b,c,d,e) := -{{{a, b}, e}, {c, d}} + {{{a, e}, c}, {b, d}} + {{{b, c}, d}, {a, e}} - {{{b, d}, c}, {a, e}} + {{{b, e}, a}, {c, d}} + {{{c, d}, e}, {a, b}} - {{{c, e}, a}, {b, d}} - {{{c, e}, d}, {a, b}} + {{{{a, b}, e}, c}, d} - {{{{a, e}, c}, b}, d} - {{{{b, c}, d}, e}, a} - {{{{b, c}, e}, a}, d} + {{{{b, c}, e}, d}, a} + {{{{b, d}, c}, e}, a} - {{{{b, e}, a}, c}, d} + {{{{b, e}, c}, a}, d} - {{{{b, e}, c}, d}, a} - {{{{c, d}, e}, b}, a} + {{{{c, e}, a}, b}, d} + {{{{c, e}, d}, b}, a}",
    "g_jor5_9(a,b,c,d,e) := -{{{a, c}, b}, {d, e}} + {{{a, d}, c}, {b, e}} + {{{b, c}, a}, {d, e}} + {{{b, c}, e}, {a, d}} - {{{b, d}, e}, {a, c}} - {{{b, e}, c}, {a, d}} - {{{c, d}, a}, {b, e}} + {{{d, e}, b}, {a, c}} + {{{{a, c}, b}, d}, e} - {{{{a, d}, c}, b}, e} - {{{{b, c}, a}, d}, e} - {{{{b, c}, e}, d}, a} + {{{{b, d}, c}, a}, e} - {{{{b, d}, c}, e}, a} + {{{{b, d}, e}, c}, a} + {{{{b, e}, c}, d}, a} + {{{{c, d}, a}, b}, e} - {{{{c, d}, b}, a}, e} + {{{{c, d}, b}, e}, a} - {{{{d, e}, b}, c}, a}",
    "g_jor5_10(a,b,c,d,e) := -{{{a, c}, b}, {d, e}} + {{{a, e}, c}, {b, d}} + {{{b, c}, a}, {d, e}} + {{{b, c}, d}, {a, e}} - {{{b, d}, c}, {a, e}} - {{{b, e}, d}, {a, c}} - {{{c, e}, a}, {b, d}} + {{{d, e}, b}, {a, c}} + {{{{a, c}, b}, e}, d} - {{{{a, e}, c}, b}, d} - {{{{b, c}, a}, e}, d} - {{{{b, c}, d}, e}, a} + {{{{b, d}, c}, e}, a} + {{{{b, e}, c}, a}, d} - {{{{b, e}, c}, d}, a} + {{{{b, e}, d}, c}, a} + {{{{c, e}, a}, b}, d} - {{{{c, e}, b}, a}, d} + {{{{c, e}, b}, d}, a} - {{{{d, e}, b}, c}, a}",
    "g_jor5_11(a,b,c,d,e) := -{{{a, c}, d}, {b, e}} + {{{a, e}, d}, {b, c}} - {{{b, c}, d}, {a, e}} + {{{b, e}, d}, {a, c}} + {{{c, d}, a}, {b, e}} + {{{c, d}, b}, {a, e}} - {{{d, e}, a}, {b, c}} - {{{d, e}, b}, {a, c}} + {{{{a, c}, d}, e}, b} - {{{{a, e}, d}, c}, b} + {{{{b, c}, d}, e}, a} - {{{{b, e}, d}, c}, a} - {{{{c, d}, a}, e}, b} - {{{{c, d}, b}, e}, a} + {{{{d, e}, a}, c}, b} + {{{{d, e}, b}, c}, a}",
    "g_jor5_12(a,b,c,d,e) := -{{{a, c}, e}, {b, d}} + {{{a, e}, d}, {b, c}} - {{{b, c}, d}, {a, e}} + {{{b, d}, e}, {a, c}} + {{{c, d}, b}, {a, e}} + {{{c, e}, a}, {b, d}} - {{{d, e}, a}, {b, c}} - {{{d, e}, b}, {a, c}} + {{{{a, c}, e}, d}, b} - {{{{a, e}, d}, c}, b} + {{{{b, c}, d}, e}, a} - {{{{b, d}, e}, c}, a} - {{{{c, d}, b}, e}, a} - {{{{c, d}, e}, a}, b} + {{{{c, d}, e}, b}, a} - {{{{c, e}, a}, d}, b} + {{{{c, e}, d}, a}, b} - {{{{c, e}, d}, b}, a} + {{{{d, e}, a}, c}, b} + {{{{d, e}, b}, c}, a}",
    "g_jor5_13(a,b,c,d,e) := -{{{a, e}, b}, {c, d}} + {{{a, e}, d}, {b, c}} - {{{b, c}, d}, {a, e}} + {{{b, e}, a}, {c, d}} + {{{c, d}, b}, {a, e}} - {{{d, e}, a}, {b, c}} + {{{{a, e}, b}, d}, c} - {{{{a, e}, d}, b}, c} + {{{{b, c}, d}, e}, a} - {{{{b, e}, a}, d}, c} + {{{{b, e}, d}, a}, c} - {{{{b, e}, d}, c}, a} - {{{{c, d}, b}, e}, a} + {{{{d, e}, a}, b}, c} - {{{{d, e}, b}, a}, c} + {{{{d, e}, b}, c}, a}",
    "g_jor5_14(a,b,c,d,e) := -{{{a, d}, b}, {c, e}} + {{{a, e}, d}, {b, c}} - {{{b, c}, d}, {a, e}} + {{{b, d}, a}, {c, e}} + {{{b, d}, c}, {a, e}} - {{{b, e}, c}, {a, d}} + {{{c, e}, b}, {a, d}} - {{{d, e}, a}, {b, c}} + {{{{a, d}, b}, e}, c} - {{{{a, e}, d}, b}, c} + {{{{b, c}, d}, e}, a} - {{{{b, d}, a}, e}, c} - {{{{b, d}, c}, e}, a} + {{{{b, e}, c}, d}, a} + {{{{b, e}, d}, a}, c} - {{{{b, e}, d}, c}, a} - {{{{c, e}, b}, d}, a} + {{{{d, e}, a}, b}, c} - {{{{d, e}, b}, a}, c} + {{{{d, e}, b}, c}, a}",
    "g_jor5_15(a,b,c,d,e) := -{{{a, b}, c}, {d, e}} + {{{a, d}, c}, {b, e}} + {{{b, c}, a}, {d, e}} + {{{b, c}, e}, {a, d}} - {{{b, e}, c}, {a, d}} - {{{c, d}, a}, {b, e}} - {{{c, d}, e}, {a, b}} + {{{d, e}, c}, {a, b}} + {{{{a, b}, c}, d}, e} - {{{{a, d}, c}, b}, e} - {{{{b, c}, a}, d}, e} - {{{{b, c}, e}, d}, a} + {{{{b, e}, c}, d}, a} + {{{{c, d}, a}, b}, e} + {{{{c, d}, e}, b}, a} - {{{{d, e}, c}, b}, a}",
    "g_jor5_16(a,b,c,d,e) := -{{{a, b}, c}, {d, e}} + {{{a, e}, c}, {b, d}} + {{{b, c}, a}, {d, e}} + {{{b, c}, d}, {a, e}} - {{{b, d}, c}, {a, e}} - {{{c, e}, a}, {b, d}} - {{{c, e}, d}, {a, b}} + {{{d, e}, c}, {a, b}} + {{{{a, b}, c}, e}, d} - {{{{a, e}, c}, b}, d} - {{{{b, c}, a}, e}, d} - {{{{b, c}, d}, e}, a} + {{{{b, d}, c}, e}, a} + {{{{c, e}, a}, b}, d} + {{{{c, e}, d}, b}, a} - {{{{d, e}, c}, b}, a}",
    "g_jor5_17(a,b,c,d,e) := -{{{a, b}, e}, {c, d}} + {{{a, e}, d}, {b, c}} - {{{b, c}, d}, {a, e}} + {{{b, d}, c}, {a, e}} + {{{b, e}, a}, {c, d}} + {{{c, d}, e}, {a, b}} - {{{d, e}, a}, {b, c}} - {{{d, e}, c}, {a, b}} + {{{{a, b}, e}, d}, c} - {{{{a, e}, d}, b}, c} + {{{{b, c}, d}, e}, a} - {{{{b, d}, c}, e}, a} - {{{{b, d}, e}, a}, c} + {{{{b, d}, e}, c}, a} - {{{{b, e}, a}, d}, c} + {{{{b, e}, d}, a}, c} - {{{{b, e}, d}, c}, a} - {{{{c, d}, e}, b}, a} + {{{{d, e}, a}, b}, c} + {{{{d, e}, c}, b}, a}",
    "g_jor5_18(a,b,c,d,e) := -{{{a, b}, d}, {c, e}} + {{{a, e}, d}, {b, c}} - {{{b, c}, d}, {a, e}} + {{{b, d}, a}, {c, e}} + {{{b, d}, c}, {a, e}} + {{{c, e}, d}, {a, b}} - {{{d, e}, a}, {b, c}} - {{{d, e}, c}, {a, b}} + {{{{a, b}, d}, e}, c} - {{{{a, e}, d}, b}, c} + {{{{b, c}, d}, e}, a} - {{{{b, d}, a}, e}, c} - {{{{b, d}, c}, e}, a} - {{{{c, e}, d}, b}, a} + {{{{d, e}, a}, b}, c} + {{{{d, e}, c}, b}, a}",
    "g_jor5_19(a,b,c,d,e) := -{{{a, e}, c}, {b, d}} + {{{a, e}, d}, {b, c}} - {{{b, c}, d}, {a, e}} + {{{b, d}, c}, {a, e}} + {{{c, e}, a}, {b, d}} - {{{d, e}, a}, {b, c}} + {{{{a, e}, c}, d}, b} - {{{{a, e}, d}, c}, b} + {{{{b, c}, d}, e}, a} - {{{{b, d}, c}, e}, a} - {{{{c, e}, a}, d}, b} + {{{{c, e}, d}, a}, b} - {{{{c, e}, d}, b}, a} + {{{{d, e}, a}, c}, b} - {{{{d, e}, c}, a}, b} + {{{{d, e}, c}, b}, a}",
    "g_jor5_20(a,b,c,d,e) := -{{{a, d}, c}, {b, e}} + {{{a, e}, d}, {b, c}} - {{{b, c}, d}, {a, e}} + {{{b, e}, c}, {a, d}} + {{{c, d}, a}, {b, e}} + {{{c, d}, b}, {a, e}} - {{{c, e}, b}, {a, d}} - {{{d, e}, a}, {b, c}} + {{{{a, d}, c}, e}, b} - {{{{a, e}, d}, c}, b} + {{{{b, c}, d}, e}, a} - {{{{b, e}, c}, d}, a} - {{{{c, d}, a}, e}, b} - {{{{c, d}, b}, e}, a} + {{{{c, e}, b}, d}, a} + {{{{c, e}, d}, a}, b} - {{{{c, e}, d}, b}, a} + {{{{d, e}, a}, c}, b} - {{{{d, e}, c}, a}, b} + {{{{d, e}, c}, b}, a}",
]

# Multiplier and f5plus combination: multiplier * g_jor5_i equals the combination.
JOR5_DECOMPOSITIONS = {
    1: (3, "f5plus(a, c, b, d, e) - f5plus(a, d, b, c, e) - 2 f5plus(a, d, c, b, e) + f5plus(a, e, b, c, d) + 2 f5plus(a, e, c, b, d) - 2 f5plus(a, e, d, b, c) + 2 f5plus(b, c, a, d, e) - 2 f5plus(b, d, a, c, e) + 2 f5plus(b, d, c, a, e) + 2 f5plus(b, e, a, c, d) - 2 f5plus(b, e, c, a, d) + 2 f5plus(b, e, d, a, c) - f5plus(c, d, a, b, e) + f5plus(c, d, b, a, e) + f5plus(c, e, a, b, d) - f5plus(c, e, b, a, d) - 2 f5plus(c, e, d, a, b) - f5plus(d, e, a, b, c) + f5plus(d, e, b, a, c) - f5plus(d, e, c, a, b)"),
    2: (3, "-f5plus(a, c, b, d, e) + f5plus(a, d, b, c, e) + 2 f5plus(a, d, c, b, e) - f5plus(a, e, b, c, d) - 2 f5plus(a, e, c, b, d) + 2 f5plus(a, e, d, b, c) - 2 f5plus(b, c, a, d, e) + 2 f5plus(b, d, a, c, e) - 2 f5plus(b, d, c, a, e) - 2 f5plus(b, e, a, c, d) + 2 f5plus(b, e, c, a, d) - 2 f5plus(b, e, d, a, c) + f5plus(c, d, a, b, e) - f5plus(c, d, b, a, e) - f5plus(c, e, a, b, d) + f5plus(c, e, b, a, d) - f5plus(c, e, d, a, b) + f5plus(d, e, a, b, c) - f5plus(d, e, b, a, c) - 2 f5plus(d, e, c, a, b)"),
    3: (3, "2 f5plus(a, c, b, d, e) + f5plus(a, d, b, c, e) - f5plus(a, d, c, b, e) - f5plus(a, e, b, c, d) + f5plus(a, e, c, b, d) - f5plus(a, e, d, b, c) + f5plus(b, c, a, d, e) - f5plus(b, d, a, c, e) + f5plus(b, d, c, a, e) + f5plus(b, e, a, c, d) - f5plus(b, e, c, a, d) + f5plus(b, e, d, a, c) + f5plus(c, d, a, b, e) - f5plus(c, d, b, a, e) - f5plus(c, e, a, b, d) + f5plus(c, e, b, a, d) - f5plus(c, e, d, a, b) - 2 f5plus(d, e, a, b, c) + 2 f5plus(d, e, b, a, c) - 2 f5plus(d, e, c, a, b)"),
    4: (3, "-2 f5plus(a, c, b, d, e) - f5plus(a, d, b, c, e) + f5plus(a, d, c, b, e) + f5plus(a, e, b, c, d) - f5plus(a, e, c, b, d) + f5plus(a, e, d, b, c) - f5plus(b, c, a, d, e) + f5plus(b, d, a, c, e) - f5plus(b, d, c, a, e) - f5plus(b, e, a, c, d) + f5plus(b, e, c, a, d) - f5plus(b, e, d, a, c) - f5plus(c, d, a, b, e) + f5plus(c, d, b, a, e) + f5plus(c, e, a, b, d) - f5plus(c, e, b, a, d) + f5plus(c, e, d, a, b) - f5plus(d, e, a, b, c) + f5plus(d, e, b, a, c) - f5plus(d, e, c, a, b)"),
    5: (3, "f5plus(a, c, b, d, e) - f5plus(a, d, b, c, e) - 2 f5plus(a, d, c, b, e) + f5plus(a, e, b, c, d) + 2 f5plus(a, e, c, b, d) + f5plus(a, e, d, b, c) + 2 f5plus(b, c, a, d, e) - 2 f5plus(b, d, a, c, e) + 2 f5plus(b, d, c, a, e) + 2 f5plus(b, e, a, c, d) - 2 f5plus(b, e, c, a, d) + 2 f5plus(b, e, d, a, c) - f5plus(c, d, a, b, e) + f5plus(c, d, b, a, e) + f5plus(c, e, a, b, d) - f5plus(c, e, b, a, d) + f5plus(c, e, d, a, b) - f5plus(d, e, a, b, c) + f5plus(d, e, b, a, c) - f5plus(d, e, c, a, b)"),
    6: (3, "-f5plus(a, c, b, d, e) - 2 f5plus(a, d, b, c, e) - f5plus(a, d, c, b, e) + 2 f5plus(a, e, b, c, d) + f5plus(a, e, c, b, d) + 2 f5plus(a, e, d, b, c) + f5plus(b, c, a, d, e) - f5plus(b, d, a, c, e) + f5plus(b, d, c, a, e) + f5plus(b, e, a, c, d) - f5plus(b, e, c, a, d) - 2 f5plus(b, e, d, a, c) - 2 f5plus(c, d, a, b, e) + 2 f5plus(c, d, b, a, e) + 2 f5plus(c, e, a, b, d) - 2 f5plus(c, e, b, a, d) + 2 f5plus(c, e, d, a, b) + f5plus(d, e, a, b, c) - f5plus(d, e, b, a, c) + f5plus(d, e, c, a, b)"),
    7: (3, "-f5plus(a, c, b, d, e) - 2 f5plus(a, d, b, c, e) - f5plus(a, d, c, b, e) + 2 f5plus(a, e, b, c, d) + f5plus(a, e, c, b, d) + 2 f5plus(a, e, d, b, c) + f5plus(b, c, a, d, e) - f5plus(b, d, a, c, e) + f5plus(b, d, c, a, e) + f5plus(b, e, a, c, d) - f5plus(b, e, c, a, d) - 2 f5plus(b, e, d, a, c) - 2 f5plus(c, d, a, b, e) + 2 f5plus(c, d, b, a, e) + 2 f5plus(c, e, a, b, d) - 2 f5plus(c, e, b, a, d) + 2 f5plus(c, e, d, a, b) + f5plus(d, e, a, b, c) - f5plus(d, e, b, a, c) + f5plus(d, e, c, a, b)"),
    8: (3, "-f5plus(a, c, b, d, e) + f5plus(a, d, b, c, e) + 2 f5plus(a, d, c, b, e) - f5plus(a, e, b, c, d) - 2 f5plus(a, e, c, b, d) - f5plus(a, e, d, b, c) - 2 f5plus(b, c, a, d, e) + 2 f5plus(b, d, a, c, e) - 2 f5plus(b, d, c, a, e) - 2 f5plus(b, e, a, c, d) + 2 f5plus(b, e, c, a, d) - 2 f5plus(b, e, d, a, c) + f5plus(c, d, a, b, e) - f5plus(c, d, b, a, e) - f5plus(c, e, a, b, d) + f5plus(c, e, b, a, d) - f5plus(c, e, d, a, b) - 2 f5plus(d, e, a, b, c) - f5plus(d, e, b, a, c) - 2 f5plus(d, e, c, a, b)"),
    9: (3, "2 f5plus(a, c, b, d, e) + f5plus(a, d, b, c, e) - f5plus(a, d, c, b, e) + 2 f5plus(a, e, b, c, d) + f5plus(a, e, c, b, d) - f5plus(a, e, d, b, c) + f5plus(b, c, a, d, e) - f5plus(b, d, a, c, e) + f5plus(b, d, c, a, e) + f5plus(b, e, a, c, d) - f5plus(b, e, c, a, d) + f5plus(b, e, d, a, c) + f5plus(c, d, a, b, e) - f5plus(c, d, b, a, e) - f5plus(c, e, a, b, d) + f5plus(c, e, b, a, d) - f5plus(c, e, d, a, b) - 2 f5plus(d, e, a, b, c) + 2 f5plus(d, e, b, a, c) - 2 f5plus(d, e, c, a, b)"),
    10: (3, "-2 f5plus(a, c, b, d, e) + 2 f5plus(a, d, b, c, e) + f5plus(a, d, c, b, e) + f5plus(a, e, b, c, d) - f5plus(a, e, c, b, d) + f5plus(a, e, d, b, c) - f5plus(b, c, a, d, e) + f5plus(b, d, a, c, e) - f5plus(b, d, c, a, e) - f5plus(b, e, a, c, d) + f5plus(b, e, c, a, d) - f5plus(b, e, d, a, c) - f5plus(c, d, a, b, e) + f5plus(c, d, b, a, e) + f5plus(c, e, a, b, d) - f5plus(c, e, b, a, d) + f5plus(c, e, d, a, b) - f5plus(d, e, a, b, c) + f5plus(d, e, b, a, c) - f5plus(d, e, c, a, b)"),
    11: (1, "-f5plus(a, d, b, c, e) - f5plus(b, d, a, c, e)"),
    12: (3, "-f5plus(a, c, b, d, e) - 2 f5plus(a, d, b, c, e) - f5plus(a, d, c, b, e) - f5plus(a, e, b, c, d) + f5plus(a, e, c, b, d) + 2 f5plus(a, e, d, b, c) + f5plus(b, c, a, d, e) - f5plus(b, d, a, c, e) + f5plus(b, d, c, a, e) - 2 f5plus(b, e, a, c, d) - f5plus(b, e, c, a, d) - 2 f5plus(b, e, d, a, c) - 2 f5plus(c, d, a, b, e) + 2 f5plus(c, d, b, a, e) + 2 f5plus(c, e, a, b, d) - 2 f5plus(c, e, b, a, d) + 2 f5plus(c, e, d, a, b) + f5plus(d, e, a, b, c) - f5plus(d, e, b, a, c) + f5plus(d, e, c, a, b)"),
    13: (3, "-f5plus(a, c, b, d, e) - 2 f5plus(a, d, b, c, e) - f5plus(a, d, c, b, e) - f5plus(a, e, b, c, d) + f5plus(a, e, c, b, d) - f5plus(a, e, d, b, c) + f5plus(b, c, a, d, e) - f5plus(b, d, a, c, e) + f5plus(b, d, c, a, e) + f5plus(b, e, a, c, d) - f5plus(b, e, c, a, d) + f5plus(b, e, d, a, c) - 2 f5plus(c, d, a, b, e) + 2 f5plus(c, d, b, a, e) - f5plus(c, e, a, b, d) + f5plus(c, e, b, a, d) - f5plus(c, e, d, a, b) + f5plus(d, e, a, b, c) - f5plus(d, e, b, a, c) + f5plus(d, e, c, a, b)"),
    14: (3, "2 f5plus(a, c, b, d, e) - 2 f5plus(a, d, b, c, e) - f5plus(a, d, c, b, e) - f5plus(a, e, b, c, d) + f5plus(a, e, c, b, d) - f5plus(a, e, d, b, c) + f5plus(b, c, a, d, e) - f5plus(b, d, a, c, e) + f5plus(b, d, c, a, e) + f5plus(b, e, a, c, d) - f5plus(b, e, c, a, d) + f5plus(b, e, d, a, c) - 2 f5plus(c, d, a, b, e) + 2 f5plus(c, d, b, a, e) - f5plus(c, e, a, b, d) + f5plus(c, e, b, a, d) - f5plus(c, e, d, a, b) + f5plus(d, e, a, b, c) - f5plus(d, e, b, a, c) + f5plus(d, e, c, a, b)"),
    15: (1, "f5plus(a, e, c, b, d)"),
    16: (1, "f5plus(a, d, c, b, e)"),
    17: (3, "f5plus(a, c, b, d, e) - f5plus(a, d, b, c, e) - 2 f5plus(a, d, c, b, e) + f5plus(a, e, b, c, d) - f5plus(a, e, c, b, d) - 2 f5plus(a, e, d, b, c) + 2 f5plus(b, c, a, d, e) - 2 f5plus(b, d, a, c, e) + 2 f5plus(b, d, c, a, e) + 2 f5plus(b, e, a, c, d) - 2 f5plus(b, e, a, c, d) - 2 f5plus(b, e, c, a, d) + 2 f5plus(b, e, d, a, c) - f5plus(c, d, a, b, e) + f5plus(c, d, b, a, e) - 2 f5plus(c, e, a, b, d) - f5plus(c, e, b, a, d) - 2 f5plus(c, e, d, a, b) - f5plus(d, e, a, b, c) + f5plus(d, e, b, a, c) - f5plus(d, e, c, a, b)"),
    18: (1, "-f5plus(a, d, c, b, e) - f5plus(c, d, a, b, e)"),
    19: (3, "f5plus(a, c, b, d, e) - f5plus(a, d, b, c, e) - 2 f5plus(a, d, c, b, e) + f5plus(a, e, b, c, d) - f5plus(a, e, c, b, d) + f5plus(a, e, d, b, c) + 2 f5plus(b, c, a, d, e) - 2 f5plus(b, d, a, c, e) + 2 f5plus(b, d, c, a, e) - f5plus(b, e, a, c, d) + f5plus(b, e, c, a, d) - f5plus(b, e, d, a, c) - f5plus(c, d, a, b, e) + f5plus(c, d, b, a, e) + f5plus(c, e, a, b, d) - f5plus(c, e, b, a, d) + f5plus(c, e, d, a, b) - f5plus(d, e, a, b, c) + f5plus(d, e, b, a, c) - f5plus(d, e, c, a, b)"),
    20: (3, "-2 f5plus(a, c, b, d, e) - f5plus(a, d, b, c, e) - 2 f5plus(a, d, c, b, e) + f5plus(a, e, b, c, d) - f5plus(a, e, c, b, d) + f5plus(a, e, d, b, c) - f5plus(b, c, a, d, e) - 2 f5plus(b, d, a, c, e) + 2 f5plus(b, d, c, a, e) - f5plus(b, e, a, c, d) + f5plus(b, e, c, a, d) - f5plus(b, e, d, a, c) - f5plus(c, d, a, b, e) + f5plus(c, d, b, a, e) + f5plus(c, e, a, b, d) - f5plus(c, e, b, a, d) + f5plus(c, e, d, a, b) - f5plus(d, e, a, b, c) + f5plus(d, e, b, a, c) - f5plus(d, e, c, a, b)"),
}

BUILTIN_SOURCE = "\n".join(CORE + LIE4 + RCOM4 + JOR5)
