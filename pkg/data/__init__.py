# graph6, cover files and the named-graph catalog
