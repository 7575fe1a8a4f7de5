# Measures, solvers, analytics and data services
