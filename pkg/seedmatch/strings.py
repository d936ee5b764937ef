graph_empty = "No edges found; the graph is empty"
graph_parse_error = "Line %(line)s: expected 'u v' or 'u v w', got %(text)r"
graph_weight_error = "Line %(line)s: weight %(weight)r is not a real number"
graph_not_square = "Adjacency matrix must be square with one row per label"
graph_duplicate_labels = "Vertex labels must be distinct"
graph_not_binary = "Graph must be binary, symmetric and hollow"
size_mismatch = "Graphs differ in size: %(n1)s vertices vs %(n2)s vertices"
seed_unknown_label = "Seed label %(label)r does not exist in %(graph)s"
seed_duplicate_label = "Seed label %(label)r is used more than once in %(graph)s"
nothing_to_match = "Every vertex is seeded (%(m)s seeds for %(c)s vertices); nothing to match"
lap_non_finite = "Profit matrix contains non-finite entries"
lap_not_square = "Profit matrix must be a non-empty square matrix"
lap_too_large = "Brute force assignment is limited to n <= %(limit)s, got n = %(n)s"
dimension_mismatch = "Matrix is %(shape)s but the instance has %(n)s nonseeds"
truth_missing_label = "Correspondence has no entry for vertex %(label)r"
config_invalid = "Invalid configuration: %(reason)s"
m_values_invalid = "Cannot parse seed counts %(text)r"
not_doubly_stochastic = "Matrix is not doubly stochastic within %(tol)s"
not_a_permutation = "Not a permutation of 0..n-1: %(image)s"
not_a_permutation_matrix = "Matrix is not a 0/1 permutation matrix"
file_not_utf8 = "File is not valid UTF-8 text (byte %(position)s)"
