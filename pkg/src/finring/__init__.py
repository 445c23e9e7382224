"""Finite rings as operation tables: ideals, idealizers, eigenrings and maximal subrings."""
