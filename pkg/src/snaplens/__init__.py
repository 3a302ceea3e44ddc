"""snaplens: sentiment, term, hot-spot and vote analytics for
SNAP-related news and social media corpora.
"""

from .corpus import (DEFAULT_KEY_TERMS, Document, Geotag, Sentence, Token,
                     filter_relevant, load_documents, reading_grade,
                     split_sentences, tokenize)
from .sentiment import (DEFAULT_RULES, DocumentScore, RuleConfig, SentenceScore,
                        TimePoint, ValenceLexicon, compound_score,
                        corpus_timeseries, document_weight, load_lexicon,
                        score_document, sentence_weight, tool_agreement,
                        word_sum_score)
from .classifier import NBModel, cross_validate, predict, train
from .terms import (TermEntry, TopicModel, bigram_collocations, lda_fit,
                    load_stopwords, tfidf, wordcloud_terms)
from .geo import (HexCell, HexGrid, WeightsMatrix, classify_hotspots,
                  contiguity_weights, gi_star, grid_to_geojson, make_hex_grid,
                  spatial_join)
from .votes import (Bill, VoteRecord, fetch_bills, filter_bills,
                    legislator_record, load_bills)
from .pipeline import (PipelineConfig, Snapshot, build_snapshot, load_config,
                       load_snapshot, save_snapshot)
from .server import create_app, serve

__version__ = "0.1.0"
