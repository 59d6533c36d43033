/** Wire types for the scoring service API. */

export interface TokenInfo {
  text: string;
  byte_start: number;
  byte_end: number;
  attention: number;
  highlighted: boolean;
}

export interface ScoreResponse {
  score_0_100: number;
  tokens: TokenInfo[];
}

export interface Span {
  start_token: number;
  end_token: number;
}

export interface CandidateInfo {
  replacement: string;
  individual_toxicity: number;
  resulting_toxicity: number;
  source: string;
}

export interface SuggestionResponse {
  span: Span;
  original_toxicity: number;
  candidates: CandidateInfo[];
}

export interface Api {
  score(text: string): Promise<ScoreResponse>;
  alternatives(text: string, span: Span): Promise<SuggestionResponse>;
  scoreSpan(text: string, span: Span): Promise<{ score_0_100: number }>;
  feedback(text: string, comment: string): Promise<{ accepted: boolean }>;
}
