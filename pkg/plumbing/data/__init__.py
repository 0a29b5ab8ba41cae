from .graph_file import GraphFile, load_graph  # noqa
