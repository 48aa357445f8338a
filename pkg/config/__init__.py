# Run settings and the named-graph catalog
