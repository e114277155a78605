from apps.algebra.ring import MonomialOrder, Polynomial


def s_polynomial(f: Polynomial, g: Polynomial, order: MonomialOrder) -> Polynomial:
    """S(f, g) = (lcm / LT(f)) * f - (lcm / LT(g)) * g"""
    field = f.ring.field
    f_coeff, f_lead = f.leading_term(order)
    g_coeff, g_lead = g.leading_term(order)
    lcm = f_lead.lcm(g_lead)
    return f.mul_term(field.inv(f_coeff), lcm / f_lead) - g.mul_term(field.inv(g_coeff), lcm / g_lead)
