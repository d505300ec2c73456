"""
Default values for every tunable of the engine.
"""

# chunking
DEFAULT_CHUNK_SIZE = 2500
DEFAULT_CHUNK_OVERLAP = 1250

# keyword retrieval
DEFAULT_BM25_K1 = 1.2
DEFAULT_BM25_B = 0.75
DEFAULT_FTS_TOP_K = 20

# semantic retrieval
DEFAULT_EMBEDDING_PROVIDER = "openai"
DEFAULT_EMBEDDING_MODEL = "text-embedding-3-small"
DEFAULT_EMBEDDING_DIM = 1024
DEFAULT_EMBEDDING_BATCH_SIZE = 32
DEFAULT_SEMANTIC_TOP_K = 30
DEFAULT_DISTANCE_THRESHOLD = 2.0

# fusion
DEFAULT_RRF_K = 60

# reranking; the keep mass is the complement of a 0.45 remaining-mass stop
DEFAULT_RERANK_MODEL = "jina-reranker-v2-base-multilingual"
DEFAULT_RERANK_BASE_URL = "https://api.jina.ai/v1"
DEFAULT_MAX_CANDIDATES = 30
DEFAULT_CUMULATIVE_KEEP_MASS = 0.55
DEFAULT_CLIFF_DROP = 0.15

# generation
DEFAULT_CHAT_MODEL = "gpt-4.1"
DEFAULT_OPENAI_BASE_URL = "https://api.openai.com/v1"
DEFAULT_TEMPERATURE = 0.0
DEFAULT_NO_RERANK_CONTEXT_LIMIT = 10
DEFAULT_STUB_ANSWER_CHARS = 200

# transport
DEFAULT_TIMEOUT_SECONDS = 60.0
DEFAULT_MAX_RETRIES = 3
DEFAULT_BACKOFF_SECONDS = 0.5
DEFAULT_MAX_CONCURRENCY = 8

# evaluation
DEFAULT_GROUP_COUNT = 5
DEFAULT_GROUP_SIZE = 300

DEFAULT_SYSTEM_PROMPT = (
    "You are a financial analyst assistant answering questions about annual "
    "10-K reports. Answer using only the information in the provided context. "
    "Do not speculate or rely on outside knowledge. If the context does not "
    "contain enough information to answer, say that the information is "
    "insufficient."
)

DEFAULT_REWRITE_PROMPT = (
    "You rewrite questions about company annual reports for a search system.\n"
    "1. Clarify vague wording and spell out abbreviations and tickers where obvious.\n"
    "2. Fix grammar and spelling mistakes.\n"
    "3. Extract the most important keywords for a keyword index "
    "(company names, tickers, financial terms, years).\n"
    'Reply with JSON only: {"clarified_query": "<text>", "keywords": ["<kw>", ...]}'
)

DEFAULT_JUDGE_PROMPT = (
    "You grade answers produced by a question-answering system against a "
    "reference answer. Compare the candidate with the ground truth and assign "
    "an integer score from 1 to 10 using this rubric:\n"
    "Score 1: Completely incorrect or unrelated answer\n"
    "Score 5: Partially correct with significant missing information\n"
    "Score 8: Basically correct with minor omissions\n"
    "Score 10: Fully correct and complete answer\n"
    "Intermediate scores are allowed. Reply with exactly two lines:\n"
    "score: <integer 1-10>\n"
    "rationale: <one sentence>"
)

INSUFFICIENT_CONTEXT_ANSWER = "Insufficient information in the provided context to answer the question."

# environment variables holding secrets, first match wins
OPENAI_KEY_ENV = ("FINRAG_OPENAI_API_KEY", "OPENAI_API_KEY")
RERANK_KEY_ENV = ("FINRAG_RERANK_API_KEY", "JINA_API_KEY")
