/**
 * Bundled demo document: the movie example with user-edited base scores
 * (stronger Writing attacker, neutral Movie prior) so low targets like
 * 0.3 sit inside the attainable interval.
 */

export const DEMO_DOCUMENT: string = "{\n \"arguments\": [\n  {\n   \"id\": \"Acting\",\n   \"base_score\": 0.45\n  },\n  {\n   \"id\": \"Freedom\",\n   \"base_score\": 0.08\n  },\n  {\n   \"id\": \"MerylStreep\",\n   \"base_score\": 0.07\n  },\n  {\n   \"id\": \"Movie\",\n   \"base_score\": 0.5\n  },\n  {\n   \"id\": \"Romance\",\n   \"base_score\": 0.06\n  },\n  {\n   \"id\": \"Themes\",\n   \"base_score\": 0.4\n  },\n  {\n   \"id\": \"TomHanks\",\n   \"base_score\": 0.05\n  },\n  {\n   \"id\": \"Writing\",\n   \"base_score\": 0.9\n  }\n ],\n \"edges\": [\n  {\n   \"source\": \"Acting\",\n   \"target\": \"Movie\",\n   \"polarity\": \"support\",\n   \"weight\": 0.95\n  },\n  {\n   \"source\": \"Freedom\",\n   \"target\": \"Themes\",\n   \"polarity\": \"support\",\n   \"weight\": 0.6\n  },\n  {\n   \"source\": \"MerylStreep\",\n   \"target\": \"Acting\",\n   \"polarity\": \"support\",\n   \"weight\": 0.9\n  },\n  {\n   \"source\": \"Romance\",\n   \"target\": \"Themes\",\n   \"polarity\": \"attack\",\n   \"weight\": 0.3\n  },\n  {\n   \"source\": \"Themes\",\n   \"target\": \"Movie\",\n   \"polarity\": \"support\",\n   \"weight\": 0.7\n  },\n  {\n   \"source\": \"TomHanks\",\n   \"target\": \"Acting\",\n   \"polarity\": \"support\",\n   \"weight\": 0.8\n  },\n  {\n   \"source\": \"Writing\",\n   \"target\": \"Movie\",\n   \"polarity\": \"attack\",\n   \"weight\": 0.6\n  }\n ]\n}\n";
