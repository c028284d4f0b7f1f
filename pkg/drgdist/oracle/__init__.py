from .graphs import ExplicitGraph, GRAPH_KINDS, build_graph, extract_ia
from .embedding import EmbeddingCheck, spectral_embedding_check
from .certificate import QAlphaCertificate, qalpha_certificate
