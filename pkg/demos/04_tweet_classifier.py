"""Supervised route for short labeled texts: a multinomial Naive Bayes
classifier over normalized tokens, with stratified cross-validation and
JSON model persistence.

Run from the repo root:  python3 demos/04_tweet_classifier.py
"""

from pathlib import Path

from snaplens import load_documents, predict, train
from snaplens.classifier import cross_validate, load_model, save_model

DATA = Path(__file__).parent / "data"
OUT = Path(__file__).parent / "out"

tweets = [d for d in load_documents(DATA / "docs.jsonl")
          if d.kind == "tweet" and d.label]
print(f"{len(tweets)} labeled tweets")
by_label = {}
for doc in tweets:
    by_label[doc.label] = by_label.get(doc.label, 0) + 1
print(f"label counts: {by_label}")

# The demo corpus is tiny, so train on everything and inspect behavior;
# cross-validation needs k examples per class.
model = train(tweets)
print(f"\nvocabulary: {len(model.vocab)} terms, classes: {model.classes}")

print("\ntraining tweets replayed:")
for doc in tweets:
    label, posterior = predict(model, doc)
    flag = "ok " if label == doc.label else "MISS"
    confidence = posterior[label]
    print(f"  {flag} {doc.id}: predicted {label} ({confidence:.2f}), true {doc.label}")

k = min(by_label.values())
if k >= 2:
    accuracy = cross_validate(tweets, k=k)
    print(f"\n{k}-fold stratified accuracy: {accuracy:.2f}")

OUT.mkdir(exist_ok=True)
model_path = OUT / "nb_model.json"
save_model(model, model_path)
reloaded = load_model(model_path)
assert predict(reloaded, tweets[0]) == predict(model, tweets[0])
print(f"\nmodel saved to {model_path} and reloads identically")
