# Graph symmetry computations: pure functions, no I/O
