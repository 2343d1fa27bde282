"""Laurent calculus on the axial symbols x0, r, y0, rho."""
