"""Algebra kernel: fields, polynomials, Groebner bases, ideals and the deformation checks"""
