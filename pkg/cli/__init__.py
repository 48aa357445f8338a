# symbreak command-line entry point
